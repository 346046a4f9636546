// Copyright 2026 The nukc Authors
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

#include "nukc/nukc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "nukc/driver.hpp"
#include "nukc/error.hpp"
#include "nukc/generate.hpp"
#include "nukc/io.hpp"
#include "nukc/lp.hpp"

struct nukc_instance {
  nukc::Instance instance;
};

struct nukc_result {
  nukc::RunReport report;
  std::string json;
};

namespace {

thread_local std::string last_error;

nukc_status Record(nukc_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
nukc_status Guard(F&& body) {
  try {
    last_error.clear();
    body();
    return NUKC_OK;
  } catch (const nukc::Error& e) {
    return Record(static_cast<nukc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Record(NUKC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Record(NUKC_UNKNOWN, e.what());
  } catch (...) {
    return Record(NUKC_UNKNOWN, "unknown exception");
  }
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void RequireNonNull(const void* p, const char* what) {
  if (p == nullptr) {
    nukc::Fail(nukc::ErrorCode::kInvalidArgument,
               std::string(what) + " must not be NULL");
  }
}

}  // namespace

extern "C" {

void nukc_solve_options_init(nukc_solve_options* options) {
  if (options == nullptr) return;
  options->algorithm = nullptr;
  options->dilation = 1.0;
  options->binary_search = 0;
  options->linear_scan = 0;
  options->max_lp_solves = 0;
}

const char* nukc_last_error(void) { return last_error.c_str(); }

const char* nukc_status_name(nukc_status status) {
  switch (status) {
    case NUKC_OK: return "ok";
    case NUKC_UNKNOWN: return "unknown";
    default:
      return nukc::ErrorCodeName(static_cast<nukc::ErrorCode>(status));
  }
}

void nukc_string_free(char* s) { std::free(s); }

nukc_status nukc_instance_from_json(const char* json, nukc_instance** out) {
  return Guard([&] {
    RequireNonNull(json, "json");
    RequireNonNull(out, "out");
    *out = nullptr;
    auto* handle = new nukc_instance{nukc::ParseInstanceJson(json).instance};
    *out = handle;
  });
}

nukc_status nukc_instance_from_file(const char* path, nukc_instance** out) {
  return Guard([&] {
    RequireNonNull(path, "path");
    RequireNonNull(out, "out");
    *out = nullptr;
    *out = new nukc_instance{nukc::ReadInstanceFile(path).instance};
  });
}

void nukc_instance_free(nukc_instance* instance) { delete instance; }

size_t nukc_instance_point_count(const nukc_instance* instance) {
  return instance ? instance->instance.size() : 0;
}

size_t nukc_instance_class_count(const nukc_instance* instance) {
  return instance ? instance->instance.class_count() : 0;
}

int64_t nukc_instance_coverage_target(const nukc_instance* instance) {
  return instance ? instance->instance.coverage_target() : 0;
}

nukc_status nukc_generate(uint64_t seed, size_t n, const char* classes,
                          int planted, int64_t target, char** out_json) {
  return Guard([&] {
    RequireNonNull(classes, "classes");
    RequireNonNull(out_json, "out_json");
    *out_json = nullptr;
    nukc::GenerateSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.classes = nukc::ParseClassSpec(classes);
    spec.planted = planted != 0;
    if (target >= 0) spec.target = target;
    const nukc::GeneratedInstance g = nukc::GenerateInstance(spec);
    *out_json = Duplicate(
        nukc::InstanceToJson(g.ToInstance(), g.points, g.plant));
  });
}

nukc_status nukc_solve(const nukc_instance* instance,
                       const nukc_solve_options* options, nukc_result** out) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(out, "out");
    *out = nullptr;
    nukc_solve_options defaults;
    nukc_solve_options_init(&defaults);
    const nukc_solve_options& o = options ? *options : defaults;
    nukc::SolveRequest request;
    if (o.algorithm != nullptr) {
      request.algorithm = nukc::ParseAlgorithm(o.algorithm);
    }
    request.dilation = o.dilation;
    request.binary_search = o.binary_search != 0;
    request.linear_scan = o.linear_scan != 0;
    if (o.max_lp_solves < 0) {
      nukc::Fail(nukc::ErrorCode::kInvalidArgument,
                 "max_lp_solves must be >= 0");
    }
    request.options.max_lp_solves = o.max_lp_solves;
    auto result = std::make_unique<nukc_result>();
    result->report = nukc::RunSolve(instance->instance, request);
    result->json = nukc::RunReportToJson(instance->instance, result->report);
    *out = result.release();
  });
}

void nukc_result_free(nukc_result* result) { delete result; }

nukc_outcome nukc_result_outcome(const nukc_result* result) {
  if (result == nullptr) return NUKC_OUTCOME_NOT_FOUND;
  switch (result->report.outcome.kind) {
    case nukc::OutcomeKind::kSolution: return NUKC_OUTCOME_SOLUTION;
    case nukc::OutcomeKind::kInfeasibleAtOne: return NUKC_OUTCOME_INFEASIBLE;
    case nukc::OutcomeKind::kNotFoundUncertified: break;
  }
  return NUKC_OUTCOME_NOT_FOUND;
}

int nukc_result_dilation_tag(const nukc_result* result) {
  return result ? result->report.outcome.dilation_tag : 0;
}

double nukc_result_lambda(const nukc_result* result) {
  return result ? result->report.lambda : 0.0;
}

size_t nukc_result_ball_count(const nukc_result* result) {
  return result ? result->report.outcome.solution.balls.size() : 0;
}

nukc_status nukc_result_ball(const nukc_result* result, size_t i,
                             size_t* center, size_t* class_index,
                             double* radius) {
  return Guard([&] {
    RequireNonNull(result, "result");
    const auto& balls = result->report.outcome.solution.balls;
    if (i >= balls.size()) {
      nukc::Fail(nukc::ErrorCode::kInvalidArgument, "ball index out of range");
    }
    if (center) *center = balls[i].center;
    if (class_index) *class_index = balls[i].class_index;
    if (radius) *radius = balls[i].radius;
  });
}

const char* nukc_result_report_json(const nukc_result* result) {
  return result ? result->json.c_str() : "";
}

nukc_status nukc_verify(const nukc_instance* instance,
                        const char* solution_json, int* feasible,
                        char** out_report_json) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(solution_json, "solution_json");
    if (out_report_json) *out_report_json = nullptr;
    const nukc::Solution s = nukc::ParseSolutionJson(solution_json);
    const nukc::VerificationReport r = nukc::Verify(instance->instance, s);
    if (feasible) *feasible = r.feasible_for_target ? 1 : 0;
    if (out_report_json) {
      *out_report_json =
          Duplicate(nukc::VerificationToJson(instance->instance, r));
    }
  });
}

nukc_status nukc_dump_lp(const nukc_instance* instance, double dilation,
                         char** out_text) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(out_text, "out_text");
    *out_text = nullptr;
    const nukc::Lp1 lp =
        nukc::BuildLp1(nukc::Scale(instance->instance, dilation));
    std::ostringstream text;
    nukc::WriteLpFormat(lp.program, text);
    *out_text = Duplicate(text.str());
  });
}

}  // extern "C"
