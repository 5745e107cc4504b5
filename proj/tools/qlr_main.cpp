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
// Command-line front end. Talks to the library exclusively through the C
// interface in qlr.h; all file I/O lives here. Exit status: 0 success,
// 1 a verification or protocol run failed, 2 unusable input or usage.

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qlr/qlr.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream body;
  body << in.rdbuf();
  if (in.bad()) throw FileError("cannot read '" + path + "'");
  return body.str();
}

// Writes through a sibling temp file and renames, so readers never see a
// partial report and a failed run never clobbers an existing one.
void write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp" + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError("cannot open '" + temp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw FileError("cannot write '" + temp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw FileError("cannot rename '" + temp.string() + "' to '" + path +
                    "': " + ec.message());
  }
}

// Frees C strings from the library on scope exit.
struct OwnedText {
  char* text = nullptr;
  ~OwnedText() { qlr_string_free(text); }
  std::string str() const { return text == nullptr ? "" : text; }
};

int report_error(const std::string& what) {
  std::cerr << "qlr: " << what << '\n';
  return kExitBadInput;
}

// Emits the report (stdout or --output) and maps the library status to
// the exit contract. Failed checks still produce their report.
int finish(qlr_status status, const OwnedText& report,
           const std::string& output) {
  if (status == QLR_BAD_INPUT) return report_error(qlr_last_error());
  if (output.empty())
    std::cout << report.str();
  else
    write_file(output, report.str());
  return status == QLR_OK ? 0 : kExitFailed;
}

bool all_digits(const std::string& text) {
  if (text.empty()) return false;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

struct EmbedArgs {
  std::string input, output, chi, factor_case = "auto", mask;
  int budget = 0;
};

int run_embed(const EmbedArgs& args) {
  const std::string text = read_file(args.input);
  qlr_embed_params params{};
  params.chi_index = -1;
  if (all_digits(args.chi))
    params.chi_index = std::stol(args.chi);
  else
    params.chi = args.chi.c_str();
  if (args.factor_case == "auto")
    params.factor_case = 0;
  else if (args.factor_case == "1")
    params.factor_case = 1;
  else if (args.factor_case == "2")
    params.factor_case = 2;
  else
    return report_error("--case must be auto, 1, or 2");
  if (!args.mask.empty()) params.mask = args.mask.c_str();
  params.budget = args.budget;
  OwnedText report;
  const qlr_status status = qlr_embed(text.c_str(), &params, &report.text);
  return finish(status, report, args.output);
}

struct VerifyArgs {
  std::string input, hamiltonian, output;
  double tol = 0.0;
  long cap = 0;
};

int run_verify(const VerifyArgs& args) {
  const std::string embedding = read_file(args.input);
  const std::string hamiltonian = read_file(args.hamiltonian);
  qlr_verify_params params{};
  params.tol_unitary = args.tol;
  params.tol_decoupling = args.tol;
  params.tol_blocks = args.tol;
  params.tol_spectrum = args.tol;
  params.cap = static_cast<size_t>(args.cap);
  OwnedText report;
  const qlr_status status = qlr_verify(hamiltonian.c_str(), embedding.c_str(),
                                       &params, &report.text);
  return finish(status, report, args.output);
}

struct AnnealArgs {
  std::string input, output, schedule = "linear";
  double tau = -1.0, field = 0.0, b0 = 0.0;
  long steps = 0, gap_samples = 0, cap = 0;
  bool paired = false;
};

int run_anneal(const AnnealArgs& args) {
  if (args.schedule != "linear")
    return report_error("--schedule only offers 'linear'");
  const std::string text = read_file(args.input);
  qlr_anneal_params params{};
  params.tau = args.tau;
  params.steps = args.steps;
  params.paired = args.paired ? 1 : 0;
  params.field = args.field;
  params.b0 = args.b0;
  params.gap_samples = args.gap_samples;
  params.cap = static_cast<size_t>(args.cap);
  OwnedText report;
  const qlr_status status = qlr_anneal(text.c_str(), &params, &report.text);
  return finish(status, report, args.output);
}

struct ProtocolArgs {
  std::string input, output, mode;
  long seed = -1, cap = 0;
  double tol = 0.0;
};

int run_protocol(const ProtocolArgs& args) {
  const std::string config = read_file(args.input);
  OwnedText path;
  if (qlr_protocol_target(config.c_str(), &path.text) != QLR_OK)
    return report_error(qlr_last_error());
  // The referenced Hamiltonian is found next to the config file.
  namespace fs = std::filesystem;
  fs::path target(path.str());
  if (target.is_relative())
    target = fs::path(args.input).parent_path() / target;
  const std::string hamiltonian = read_file(target.string());
  qlr_protocol_params params{};
  params.mode = args.mode.empty() ? nullptr : args.mode.c_str();
  params.seed = args.seed;
  params.threshold = args.tol;
  params.cap = static_cast<size_t>(args.cap);
  OwnedText report;
  const qlr_status status = qlr_protocol(hamiltonian.c_str(), config.c_str(),
                                         &params, &report.text);
  return finish(status, report, args.output);
}

struct SimulateArgs {
  std::string input, output, initial, trajectory;
  double tau = -1.0;
  long steps = 0, cap = 0;
};

int run_simulate(const SimulateArgs& args) {
  const std::string text = read_file(args.input);
  qlr_simulate_params params{};
  params.tau = args.tau;
  params.steps = args.steps;
  params.initial = args.initial.empty() ? nullptr : args.initial.c_str();
  params.cap = static_cast<size_t>(args.cap);
  OwnedText report;
  OwnedText trajectory;
  const qlr_status status =
      qlr_simulate(text.c_str(), &params, &report.text,
                   args.trajectory.empty() ? nullptr : &trajectory.text);
  if (status == QLR_OK && !args.trajectory.empty())
    write_file(args.trajectory, trajectory.str());
  return finish(status, report, args.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian locality compilation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return qlr_version(); });

  EmbedArgs embed_args;
  CLI::App* embed = app.add_subcommand(
      "embed", "Trade one interaction term for an ancilla qubit");
  embed->add_option("--input", embed_args.input, "Hamiltonian file")
      ->required();
  embed->add_option("--output", embed_args.output,
                    "Embedding report file (default stdout)");
  embed->add_option("--chi", embed_args.chi,
                    "Term to eliminate: Pauli word or 0-based index into "
                    "the normalized term list")
      ->required();
  embed->add_option("--case", embed_args.factor_case,
                    "Factorization: auto (search), 1 (whole word), "
                    "2 (explicit --mask)");
  embed->add_option("--mask", embed_args.mask,
                    "Factorization mask bitstring for --case 2");
  embed->add_option("--budget", embed_args.budget,
                    "Exhaustive factorization-search limit");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Replay the dense checks on an embedding report");
  verify->add_option("--input", verify_args.input, "Embedding report file")
      ->required();
  verify
      ->add_option("--hamiltonian", verify_args.hamiltonian,
                   "Original Hamiltonian file")
      ->required();
  verify->add_option("--output", verify_args.output,
                     "Verification report file (default stdout)");
  verify->add_option("--tol", verify_args.tol,
                     "Blanket tolerance for every check");
  verify->add_option("--cap", verify_args.cap, "Dense register limit");

  AnnealArgs anneal_args;
  CLI::App* anneal = app.add_subcommand(
      "anneal", "Anneal a spin-glass instance, optionally paired with its "
                "flip-all embedding");
  anneal->add_option("--input", anneal_args.input, "Instance file")
      ->required();
  anneal->add_option("--output", anneal_args.output,
                     "Anneal report file (default stdout)");
  anneal->add_option("--tau", anneal_args.tau, "Anneal duration");
  anneal->add_option("--steps", anneal_args.steps, "Integrator slices");
  anneal->add_option("--schedule", anneal_args.schedule,
                     "Interpolation schedule (linear)");
  anneal->add_flag("--paired", anneal_args.paired,
                   "Also run the embedded flip-all pair");
  anneal->add_option("--field", anneal_args.field,
                     "Uniform transverse-field weight");
  anneal->add_option("--b0", anneal_args.b0, "Flip-all weight (paired)");
  anneal->add_option("--gap-samples", anneal_args.gap_samples,
                     "Spectral samples along the schedule");
  anneal->add_option("--cap", anneal_args.cap, "Dense register limit");

  ProtocolArgs protocol_args;
  CLI::App* protocol = app.add_subcommand(
      "protocol", "Run the embedded state-preparation pipeline");
  protocol->add_option("--input", protocol_args.input, "Run config file")
      ->required();
  protocol->add_option("--output", protocol_args.output,
                       "Protocol report file (default stdout)");
  protocol->add_option("--mode", protocol_args.mode,
                       "Override the config mode: full or shortcut");
  protocol->add_option("--seed", protocol_args.seed,
                       "Override the measurement seed");
  protocol->add_option("--tol", protocol_args.tol,
                       "Override the leakage failure threshold");
  protocol->add_option("--cap", protocol_args.cap, "Dense register limit");

  SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Integrate a Hamiltonian and report spectrum and "
                  "final-state statistics");
  simulate->add_option("--input", simulate_args.input, "Hamiltonian file")
      ->required();
  simulate->add_option("--output", simulate_args.output,
                       "Report file (default stdout)");
  simulate->add_option("--tau", simulate_args.tau, "Evolution time");
  simulate->add_option("--steps", simulate_args.steps, "Integrator slices");
  simulate->add_option("--initial", simulate_args.initial,
                       "zeros, plus, or a bitstring");
  simulate->add_option("--trajectory", simulate_args.trajectory,
                       "Write the per-step state dump to this file");
  simulate->add_option("--cap", simulate_args.cap, "Dense register limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (embed->parsed()) return run_embed(embed_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (anneal->parsed()) return run_anneal(anneal_args);
    if (protocol->parsed()) return run_protocol(protocol_args);
    if (simulate->parsed()) return run_simulate(simulate_args);
  } catch (const FileError& error) {
    return report_error(error.what());
  } catch (const std::exception& error) {
    return report_error(error.what());
  }
  return report_error("no subcommand");
}
