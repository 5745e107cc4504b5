// Copyright 2026 The qlr developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Exercises the shared library through the C header only, the way an
// external binding would.

#include "qlr/qlr.h"

#include <cstring>
#include <string>

#include "doctest.h"

namespace {

const char* kHamiltonian =
    "qubits 3\n"
    "0.25 ZII\n"
    "-0.5 IZI\n"
    "0.75 IIZ\n"
    "0.5 ZZI\n"
    "0.625 XXX\n";

// Takes ownership of a C report and frees it.
std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  qlr_string_free(text);
  return out;
}

bool has_line(const std::string& report, const std::string& line) {
  return ("\n" + report).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("version and error strings are always available") {
  CHECK(std::strcmp(qlr_version(), "1.0.0") == 0);
  CHECK(qlr_last_error() != nullptr);
  qlr_string_free(nullptr);
}

TEST_CASE("qlr_embed produces a report and qlr_verify accepts it") {
  qlr_embed_params params{};
  params.chi = "XXX";
  char* embedding = nullptr;
  REQUIRE(qlr_embed(kHamiltonian, &params, &embedding) == QLR_OK);
  const std::string embedding_text = take(embedding);
  CHECK(embedding_text.rfind("qlr embedding v1", 0) == 0);

  char* report = nullptr;
  REQUIRE(qlr_verify(kHamiltonian, embedding_text.c_str(), nullptr,
                     &report) == QLR_OK);
  const std::string report_text = take(report);
  CHECK(has_line(report_text, "result pass"));
  CHECK(std::string(qlr_last_error()).empty());
}

TEST_CASE("qlr_embed selects by index and honors the mask") {
  qlr_embed_params by_index{};
  by_index.chi_index = 2;  // normalized order: IIZ IZI XXX ZII ZZI
  char* first = nullptr;
  REQUIRE(qlr_embed(kHamiltonian, &by_index, &first) == QLR_OK);

  qlr_embed_params masked{};
  masked.chi = "XXX";
  masked.factor_case = 2;
  masked.mask = "111";
  char* second = nullptr;
  REQUIRE(qlr_embed(kHamiltonian, &masked, &second) == QLR_OK);

  const std::string a = take(first);
  const std::string b = take(second);
  CHECK(has_line(a, "chi XXX"));
  CHECK(has_line(b, "mask 111"));
}

TEST_CASE("qlr_embed rejects unusable input with a message") {
  qlr_embed_params params{};
  params.chi = "YYY";
  char* report = reinterpret_cast<char*>(0x1);
  char* untouched = report;
  CHECK(qlr_embed(kHamiltonian, &params, &report) == QLR_BAD_INPUT);
  CHECK(report == untouched);  // nothing was written
  CHECK(std::string(qlr_last_error()).find("YYY") != std::string::npos);

  CHECK(qlr_embed(nullptr, &params, &report) == QLR_BAD_INPUT);
  CHECK(qlr_embed(kHamiltonian, nullptr, &report) == QLR_BAD_INPUT);
  params.chi = nullptr;
  params.chi_index = -1;
  CHECK(qlr_embed(kHamiltonian, &params, &report) == QLR_BAD_INPUT);
  params.chi = "XXX";
  params.factor_case = 7;
  CHECK(qlr_embed(kHamiltonian, &params, &report) == QLR_BAD_INPUT);
}

TEST_CASE("qlr_verify distinguishes failure from bad input") {
  qlr_embed_params params{};
  params.chi = "XXX";
  char* embedding = nullptr;
  REQUIRE(qlr_embed(kHamiltonian, &params, &embedding) == QLR_OK);
  std::string tampered = take(embedding);

  // Corrupt one physical coefficient: 0.25 ZII anticommutes with XXX and
  // appears in the physical listing behind a Z on the ancilla.
  const std::string::size_type at = tampered.find("0.25 ZZII");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 4, "0.35");

  char* report = nullptr;
  CHECK(qlr_verify(kHamiltonian, tampered.c_str(), nullptr, &report) ==
        QLR_FAILED);
  const std::string report_text = take(report);
  CHECK(has_line(report_text, "result fail"));

  CHECK(qlr_verify(kHamiltonian, "garbage", nullptr, &report) ==
        QLR_BAD_INPUT);
  CHECK(std::string(qlr_last_error()).find("line") != std::string::npos);
}

TEST_CASE("qlr_anneal reports both paired runs") {
  const char* instance =
      "n 2\n"
      "h 0 0.4\n"
      "J 1 0 -0.7\n";
  qlr_anneal_params params{};
  params.tau = 2.0;
  params.steps = 100;
  params.paired = 1;
  params.gap_samples = 11;
  char* report = nullptr;
  REQUIRE(qlr_anneal(instance, &params, &report) == QLR_OK);
  const std::string text = take(report);
  CHECK(has_line(text, "run direct"));
  CHECK(has_line(text, "run embedded"));
  CHECK(text.find("paired_difference") != std::string::npos);

  CHECK(qlr_anneal("n 0\n", nullptr, &report) == QLR_BAD_INPUT);
}

TEST_CASE("qlr_protocol runs a config against supplied Hamiltonian text") {
  const char* config =
      "hamiltonian glass.ham\n"
      "chi XXX\n"
      "tau 1.0\n"
      "steps 50\n"
      "seed 3\n";

  char* path = nullptr;
  REQUIRE(qlr_protocol_target(config, &path) == QLR_OK);
  CHECK(take(path) == "glass.ham");

  char* report = nullptr;
  REQUIRE(qlr_protocol(kHamiltonian, config, nullptr, &report) == QLR_OK);
  const std::string full = take(report);
  CHECK(has_line(full, "mode full"));
  CHECK(has_line(full, "result pass"));

  // The shortcut override refuses |0...0> under an x-only interaction.
  qlr_protocol_params overrides{};
  overrides.mode = "shortcut";
  overrides.seed = -1;
  REQUIRE(qlr_protocol(kHamiltonian, config, &overrides, &report) ==
          QLR_FAILED);
  const std::string refused = take(report);
  CHECK(has_line(refused, "result fail"));
  CHECK(has_line(refused, "mode shortcut"));

  overrides.mode = "sideways";
  CHECK(qlr_protocol(kHamiltonian, config, &overrides, &report) ==
        QLR_BAD_INPUT);
  CHECK(qlr_protocol(kHamiltonian, "chi XXX\n", nullptr, &report) ==
        QLR_BAD_INPUT);
}

TEST_CASE("qlr_simulate returns a report and an optional trajectory") {
  qlr_simulate_params params{};
  params.tau = 0.5;
  params.steps = 8;
  params.initial = "101";
  char* report = nullptr;
  char* trajectory = nullptr;
  REQUIRE(qlr_simulate(kHamiltonian, &params, &report, &trajectory) ==
          QLR_OK);
  const std::string text = take(report);
  const std::string dump = take(trajectory);
  CHECK(text.rfind("qlr simulate v1", 0) == 0);
  CHECK(dump.rfind("t 0 ", 0) == 0);

  // Without a trajectory sink the run is identical, just lighter.
  char* report_only = nullptr;
  REQUIRE(qlr_simulate(kHamiltonian, &params, &report_only, nullptr) ==
          QLR_OK);
  CHECK(take(report_only) == text);

  params.initial = "10";
  CHECK(qlr_simulate(kHamiltonian, &params, &report, nullptr) ==
        QLR_BAD_INPUT);
}

TEST_CASE("qlr reports are deterministic across calls") {
  qlr_embed_params params{};
  params.chi = "XXX";
  char* first = nullptr;
  char* second = nullptr;
  REQUIRE(qlr_embed(kHamiltonian, &params, &first) == QLR_OK);
  REQUIRE(qlr_embed(kHamiltonian, &params, &second) == QLR_OK);
  CHECK(take(first) == take(second));
}
