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

// nukc: command-line front end over the C interface.
//
//   nukc solve <file> [--algorithm A] [--dilation L | --binary-search]
//   nukc generate --seed S --n N --classes "k1:r1,k2:r2" [--planted]
//   nukc verify <instance> <solution>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nukc/nukc.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNotFound = 3;

int Report(nukc_status status) {
  std::cerr << "nukc: " << nukc_status_name(status) << ": "
            << nukc_last_error() << "\n";
  return kExitError;
}

bool Slurp(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return true;
}

struct SolveArgs {
  std::string file;
  std::string algorithm = "auto";
  double dilation = 1.0;
  bool binary_search = false;
  bool linear_scan = false;
  long max_iterations = 0;
  std::string dump_lp;
};

int RunSolve(const SolveArgs& args) {
  nukc_instance* instance = nullptr;
  nukc_status st = nukc_instance_from_file(args.file.c_str(), &instance);
  if (st != NUKC_OK) return Report(st);

  if (!args.dump_lp.empty()) {
    char* text = nullptr;
    st = nukc_dump_lp(instance, args.dilation, &text);
    if (st != NUKC_OK) {
      nukc_instance_free(instance);
      return Report(st);
    }
    std::ofstream lp(args.dump_lp);
    lp << text;
    nukc_string_free(text);
    if (!lp) {
      nukc_instance_free(instance);
      std::cerr << "nukc: cannot write " << args.dump_lp << "\n";
      return kExitError;
    }
  }

  nukc_solve_options options;
  nukc_solve_options_init(&options);
  options.algorithm = args.algorithm.c_str();
  options.dilation = args.dilation;
  options.binary_search = args.binary_search;
  options.linear_scan = args.linear_scan;
  options.max_lp_solves = args.max_iterations;

  nukc_result* result = nullptr;
  st = nukc_solve(instance, &options, &result);
  nukc_instance_free(instance);
  if (st != NUKC_OK) return Report(st);
  std::cout << nukc_result_report_json(result);
  const nukc_outcome outcome = nukc_result_outcome(result);
  nukc_result_free(result);
  switch (outcome) {
    case NUKC_OUTCOME_SOLUTION: return 0;
    case NUKC_OUTCOME_INFEASIBLE: return kExitInfeasible;
    case NUKC_OUTCOME_NOT_FOUND: return kExitNotFound;
  }
  return kExitError;
}

struct GenerateArgs {
  std::uint64_t seed = 1;
  std::size_t n = 10;
  std::string classes;
  bool planted = false;
  std::optional<std::int64_t> target;
};

int RunGenerate(const GenerateArgs& args) {
  char* json = nullptr;
  const nukc_status st =
      nukc_generate(args.seed, args.n, args.classes.c_str(), args.planted,
                    args.target.value_or(-1), &json);
  if (st != NUKC_OK) return Report(st);
  std::cout << json;
  nukc_string_free(json);
  return 0;
}

int RunVerify(const std::string& instance_path,
              const std::string& solution_path) {
  std::string solution;
  if (!Slurp(solution_path, &solution)) {
    std::cerr << "nukc: cannot open " << solution_path << "\n";
    return kExitError;
  }
  nukc_instance* instance = nullptr;
  nukc_status st = nukc_instance_from_file(instance_path.c_str(), &instance);
  if (st != NUKC_OK) return Report(st);
  int feasible = 0;
  char* report = nullptr;
  st = nukc_verify(instance, solution.c_str(), &feasible, &report);
  nukc_instance_free(instance);
  if (st != NUKC_OK) return Report(st);
  std::cout << report;
  nukc_string_free(report);
  return feasible ? 0 : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-uniform k-center solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "solve an instance file");
  cmd_solve->add_option("file", solve.file, "instance JSON")->required();
  cmd_solve->add_option("--algorithm", solve.algorithm, "solver")
      ->check(CLI::IsMember({"auto", "robust2", "contracted", "nukc2", "nukc3",
                             "kcenter", "robust-kcenter"}));
  auto* dilation = cmd_solve->add_option("--dilation", solve.dilation,
                                         "fixed dilation (default 1)");
  auto* search = cmd_solve->add_flag("--binary-search", solve.binary_search,
                                     "search the smallest dilation");
  dilation->excludes(search);
  cmd_solve->add_flag("--linear-scan", solve.linear_scan,
                      "with --binary-search, scan candidates in order")
      ->needs(search);
  cmd_solve->add_option("--max-iterations", solve.max_iterations,
                        "LP solves per round-or-cut loop")
      ->check(CLI::NonNegativeNumber);
  cmd_solve->add_option("--dump-lp", solve.dump_lp,
                        "write the initial LP relaxation (two classes)");

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand("generate", "write a random instance");
  cmd_gen->add_option("--seed", gen.seed, "RNG seed")->required();
  cmd_gen->add_option("--n", gen.n, "point count")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--classes", gen.classes, "k1:r1,k2:r2,...")->required();
  cmd_gen->add_flag("--planted", gen.planted, "plant a dilation-1 solution");
  cmd_gen->add_option("--target", gen.target, "coverage target (default n)");

  std::string verify_instance;
  std::string verify_solution;
  auto* cmd_verify = app.add_subcommand("verify", "check a solution");
  cmd_verify->add_option("instance", verify_instance)->required();
  cmd_verify->add_option("solution", verify_solution)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (*cmd_solve) return RunSolve(solve);
  if (*cmd_gen) {
    if (gen.target && *gen.target < 0) {
      std::cerr << "nukc: --target must be >= 0\n";
      return kExitError;
    }
    return RunGenerate(gen);
  }
  return RunVerify(verify_instance, verify_solution);
}
