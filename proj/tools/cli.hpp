// Copyright 2026 The Authors.
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

#ifndef TEAMFORM_TOOLS_CLI_HPP_
#define TEAMFORM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace teamform::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolver = 1;
inline constexpr int kExitUsage = 2;

// Header shared by every solver CSV. Trace rows fill tau, coverage and
// objective; the summary row fills the rest.
inline constexpr const char* kSolverCsvHeader =
    "kind,lambda,beta,tau,coverage,objective,best_tau,realized_lmax,realized_objective,"
    "wall_time_ms";
inline constexpr const char* kSweepCsvHeader = "lambda,best_tau,coverage,max_load,objective";
inline constexpr const char* kMetricsCsvHeader =
    "kind,task,size,max_size,radius,density,pairwise,singleton_teams";

// args excludes the program name. Output files go where the flags say; out and
// err receive help text and diagnostics.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teamform::cli

#endif  // TEAMFORM_TOOLS_CLI_HPP_
