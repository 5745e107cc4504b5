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

#include "qlr/qlr.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "qlr/workflows.hpp"

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

qlr_status bad_input(const std::string& message) {
  g_last_error = message;
  return QLR_BAD_INPUT;
}

// Catches everything a workflow can throw. Parse errors, impossible
// requests, and register caps all mean the inputs cannot be acted on.
template <typename Call>
qlr_status guarded(Call&& call) {
  g_last_error.clear();
  try {
    return call();
  } catch (const std::exception& error) {
    return bad_input(error.what());
  } catch (...) {
    return bad_input("unknown error");
  }
}

qlr_status require_text(const char* text, const char* what) {
  if (text != nullptr) return QLR_OK;
  return bad_input(std::string(what) + " is null");
}

qlr_status deliver(const std::string& text, char** out, const char* what) {
  if (out == nullptr) return bad_input(std::string(what) + " pointer is null");
  *out = copy_out(text);
  if (*out == nullptr) return bad_input("out of memory");
  return QLR_OK;
}

}  // namespace

extern "C" {

const char* qlr_version(void) { return "1.0.0"; }

const char* qlr_last_error(void) { return g_last_error.c_str(); }

void qlr_string_free(char* text) { std::free(text); }

qlr_status qlr_embed(const char* hamiltonian_text,
                     const qlr_embed_params* params, char** report_out) {
  return guarded([&]() -> qlr_status {
    if (qlr_status s = require_text(hamiltonian_text, "hamiltonian text"))
      return s;
    if (params == nullptr) return bad_input("embed parameters are null");
    qlr::EmbedOptions options;
    if (params->chi != nullptr)
      options.selector.chi = params->chi;
    else
      options.selector.index = params->chi_index;
    switch (params->factor_case) {
      case 0: options.factor_case = qlr::FactorCase::automatic; break;
      case 1: options.factor_case = qlr::FactorCase::plain; break;
      case 2: options.factor_case = qlr::FactorCase::masked; break;
      default:
        return bad_input("factor_case must be 0, 1, or 2");
    }
    if (params->mask != nullptr) options.mask = params->mask;
    if (params->budget > 0) options.budget = params->budget;
    return deliver(qlr::embed_workflow(hamiltonian_text, options), report_out,
                   "report");
  });
}

qlr_status qlr_verify(const char* hamiltonian_text,
                      const char* embedding_text,
                      const qlr_verify_params* params, char** report_out) {
  return guarded([&]() -> qlr_status {
    if (qlr_status s = require_text(hamiltonian_text, "hamiltonian text"))
      return s;
    if (qlr_status s = require_text(embedding_text, "embedding text"))
      return s;
    qlr::VerifyOptions options;
    if (params != nullptr) {
      if (params->tol_unitary > 0) options.tol_unitary = params->tol_unitary;
      if (params->tol_decoupling > 0)
        options.tol_decoupling = params->tol_decoupling;
      if (params->tol_blocks > 0) options.tol_blocks = params->tol_blocks;
      if (params->tol_spectrum > 0)
        options.tol_spectrum = params->tol_spectrum;
      if (params->cap > 0) options.cap = params->cap;
    }
    const qlr::VerifyOutcome outcome =
        qlr::verify_workflow(hamiltonian_text, embedding_text, options);
    if (qlr_status s = deliver(outcome.report, report_out, "report"))
      return s;
    return outcome.passed ? QLR_OK : QLR_FAILED;
  });
}

qlr_status qlr_anneal(const char* instance_text,
                      const qlr_anneal_params* params, char** report_out) {
  return guarded([&]() -> qlr_status {
    if (qlr_status s = require_text(instance_text, "instance text")) return s;
    qlr::AnnealWorkflowOptions options;
    if (params != nullptr) {
      if (params->tau >= 0) options.tau = params->tau;
      if (params->steps > 0) options.steps = params->steps;
      options.paired = params->paired != 0;
      if (params->field != 0) options.field = params->field;
      if (params->b0 != 0) options.b0 = params->b0;
      if (params->gap_samples > 0)
        options.gap_samples = static_cast<std::size_t>(params->gap_samples);
      if (params->cap > 0) options.cap = params->cap;
    }
    return deliver(qlr::anneal_workflow(instance_text, options), report_out,
                   "report");
  });
}

qlr_status qlr_protocol_target(const char* config_text, char** path_out) {
  return guarded([&]() -> qlr_status {
    if (qlr_status s = require_text(config_text, "config text")) return s;
    const qlr::ProtocolConfig config =
        qlr::parse_protocol_config(config_text);
    return deliver(config.hamiltonian_path, path_out, "path");
  });
}

qlr_status qlr_protocol(const char* hamiltonian_text,
                        const char* config_text,
                        const qlr_protocol_params* params, char** report_out) {
  return guarded([&]() -> qlr_status {
    if (qlr_status s = require_text(hamiltonian_text, "hamiltonian text"))
      return s;
    if (qlr_status s = require_text(config_text, "config text")) return s;
    qlr::ProtocolConfig config = qlr::parse_protocol_config(config_text);
    if (params != nullptr) {
      if (params->mode != nullptr) {
        const std::string mode = params->mode;
        if (mode == "full")
          config.mode = qlr::ProtocolMode::full_decode;
        else if (mode == "shortcut")
          config.mode = qlr::ProtocolMode::shortcut;
        else
          return bad_input("mode must be 'full' or 'shortcut'");
      }
      if (params->seed >= 0)
        config.seed = static_cast<std::uint64_t>(params->seed);
      if (params->threshold > 0) config.fail_threshold = params->threshold;
      if (params->cap > 0) config.cap = params->cap;
    }
    const qlr::ProtocolWorkflowOutcome outcome =
        qlr::protocol_workflow(hamiltonian_text, config);
    if (qlr_status s = deliver(outcome.report, report_out, "report"))
      return s;
    return outcome.passed ? QLR_OK : QLR_FAILED;
  });
}

qlr_status qlr_simulate(const char* hamiltonian_text,
                        const qlr_simulate_params* params, char** report_out,
                        char** trajectory_out) {
  return guarded([&]() -> qlr_status {
    if (qlr_status s = require_text(hamiltonian_text, "hamiltonian text"))
      return s;
    qlr::SimulateOptions options;
    options.trajectory = trajectory_out != nullptr;
    if (params != nullptr) {
      if (params->tau >= 0) options.tau = params->tau;
      if (params->steps > 0) options.steps = params->steps;
      if (params->initial != nullptr) options.initial = params->initial;
      if (params->cap > 0) options.cap = params->cap;
    }
    const qlr::SimulateOutcome outcome =
        qlr::simulate_workflow(hamiltonian_text, options);
    if (qlr_status s = deliver(outcome.report, report_out, "report"))
      return s;
    if (trajectory_out != nullptr) {
      if (qlr_status s =
              deliver(outcome.trajectory, trajectory_out, "trajectory")) {
        qlr_string_free(*report_out);
        *report_out = nullptr;
        return s;
      }
    }
    return QLR_OK;
  });
}

}  // extern "C"
