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
// Drives the installed command-line binary as a subprocess and checks
// the exit-status contract: 0 success, 1 failed verification or
// protocol, 2 unusable input.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr folds into stdout.
RunResult run(const std::string& args) {
  const std::string command = std::string(QLR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    std::string name = (fs::temp_directory_path() / "qlr_cli_XXXXXX").string();
    REQUIRE(mkdtemp(name.data()) != nullptr);
    path = name;
  }
  ~TempDir() {
    std::error_code ignored;
    fs::remove_all(path, ignored);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path target = path / name;
    std::ofstream out(target, std::ios::binary);
    out << content;
    return target.string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path / name, std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
  }
};

const char* kHamiltonian =
    "qubits 3\n"
    "0.25 ZII\n"
    "-0.5 IZI\n"
    "0.75 IIZ\n"
    "0.5 ZZI\n"
    "0.625 XXX\n";

const char* kInstance =
    "n 2\n"
    "h 0 0.4\n"
    "J 1 0 -0.7\n";

}  // namespace

TEST_CASE("embed and verify chain through files with status 0") {
  TempDir dir;
  const std::string ham = dir.file("h.ham", kHamiltonian);
  const std::string emb = (dir.path / "h.emb").string();

  const RunResult embed =
      run("embed --input " + ham + " --chi XXX --output " + emb);
  REQUIRE(embed.code == 0);
  CHECK(embed.out.empty());
  CHECK(dir.read("h.emb").rfind("qlr embedding v1", 0) == 0);

  const RunResult verify =
      run("verify --input " + emb + " --hamiltonian " + ham);
  CHECK(verify.code == 0);
  CHECK(verify.out.find("result pass") != std::string::npos);
}

TEST_CASE("identical invocations write identical bytes") {
  TempDir dir;
  const std::string ham = dir.file("h.ham", kHamiltonian);
  REQUIRE(run("embed --input " + ham + " --chi 2 --output " +
              (dir.path / "a.emb").string())
              .code == 0);
  REQUIRE(run("embed --input " + ham + " --chi 2 --output " +
              (dir.path / "b.emb").string())
              .code == 0);
  const std::string a = dir.read("a.emb");
  CHECK(a == dir.read("b.emb"));
  // --chi accepts the term index or the word itself.
  const RunResult by_word = run("embed --input " + ham + " --chi XXX");
  CHECK(by_word.out == a);
}

TEST_CASE("verify exits 1 on a corrupted report and 2 on garbage") {
  TempDir dir;
  const std::string ham = dir.file("h.ham", kHamiltonian);
  const std::string emb = (dir.path / "h.emb").string();
  REQUIRE(run("embed --input " + ham + " --chi XXX --output " + emb).code ==
          0);

  std::string tampered = dir.read("h.emb");
  const std::string::size_type at = tampered.find("0.25 ZZII");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 4, "0.35");
  const std::string bad = dir.file("bad.emb", tampered);

  const RunResult failed =
      run("verify --input " + bad + " --hamiltonian " + ham);
  CHECK(failed.code == 1);
  CHECK(failed.out.find("result fail") != std::string::npos);

  const std::string garbage = dir.file("garbage.emb", "not a report\n");
  const RunResult rejected =
      run("verify --input " + garbage + " --hamiltonian " + ham);
  CHECK(rejected.code == 2);

  // A blanket tolerance wide enough to forgive the corruption.
  const RunResult forgiven =
      run("verify --input " + bad + " --hamiltonian " + ham + " --tol 10");
  CHECK(forgiven.code == 0);
}

TEST_CASE("anneal reports paired flip-all agreement") {
  TempDir dir;
  const std::string inst = dir.file("i.sg", kInstance);
  const RunResult result = run("anneal --input " + inst +
                               " --tau 2 --steps 100 --gap-samples 11 "
                               "--paired");
  CHECK(result.code == 0);
  CHECK(result.out.find("run direct") != std::string::npos);
  CHECK(result.out.find("run embedded") != std::string::npos);
  CHECK(result.out.find("paired_difference") != std::string::npos);

  const std::string empty = dir.file("bad.sg", "n 0\n");
  CHECK(run("anneal --input " + empty).code == 2);
  CHECK(run("anneal --input " + inst + " --schedule cosine").code == 2);
}

TEST_CASE("protocol resolves the Hamiltonian next to the config") {
  TempDir dir;
  dir.file("h.ham", kHamiltonian);
  const std::string cfg = dir.file("run.cfg",
                                   "hamiltonian h.ham\n"
                                   "chi XXX\n"
                                   "tau 1.0\n"
                                   "steps 50\n"
                                   "seed 3\n");

  const RunResult full = run("protocol --input " + cfg);
  CHECK(full.code == 0);
  CHECK(full.out.find("mode full") != std::string::npos);
  CHECK(full.out.find("result pass") != std::string::npos);

  // Shortcut mode refuses |000> under the x-only interaction: exit 1.
  const RunResult shortcut = run("protocol --input " + cfg +
                                 " --mode shortcut");
  CHECK(shortcut.code == 1);
  CHECK(shortcut.out.find("result fail") != std::string::npos);

  const RunResult reseeded = run("protocol --input " + cfg + " --seed 9");
  CHECK(reseeded.code == 0);
  CHECK(reseeded.out.find("seed 9") != std::string::npos);

  const std::string orphan =
      dir.file("orphan.cfg", "hamiltonian nowhere.ham\nchi XXX\n");
  CHECK(run("protocol --input " + orphan).code == 2);
}

TEST_CASE("simulate writes report and trajectory files atomically") {
  TempDir dir;
  const std::string ham = dir.file("h.ham", kHamiltonian);
  const std::string report = (dir.path / "sim.txt").string();
  const std::string traj = (dir.path / "traj.txt").string();
  const RunResult result =
      run("simulate --input " + ham + " --tau 0.5 --steps 8 --initial 101 " +
          "--output " + report + " --trajectory " + traj);
  REQUIRE(result.code == 0);
  CHECK(dir.read("sim.txt").rfind("qlr simulate v1", 0) == 0);
  const std::string dump = dir.read("traj.txt");
  CHECK(dump.rfind("t 0 ", 0) == 0);
  // 8 slices plus the initial record.
  int lines = 0;
  for (char c : dump) lines += c == '\n';
  CHECK(lines == 9);
  // No temp files linger.
  std::size_t entries = 0;
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    (void)entry;
    ++entries;
  }
  CHECK(entries == 3);
}

TEST_CASE("usage errors exit 2") {
  TempDir dir;
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("embed").code == 2);
  CHECK(run("embed --chi XXX").code == 2);
  const std::string ham = dir.file("h.ham", kHamiltonian);
  CHECK(run("embed --input " + ham + " --chi XXX --frobnicate").code == 2);
  CHECK(run("embed --input " + ham + " --chi XXX --case 3").code == 2);
  CHECK(run("embed --input " + ham + " --chi XXX --case 2").code == 2);
  CHECK(run("embed --input " + dir.path.string() + "/absent.ham --chi XXX")
            .code == 2);
}

TEST_CASE("help and version exit 0") {
  CHECK(run("--help").code == 0);
  CHECK(run("embed --help").code == 0);
  const RunResult version = run("--version");
  CHECK(version.code == 0);
  CHECK(version.out.find("1.0.0") != std::string::npos);
}
