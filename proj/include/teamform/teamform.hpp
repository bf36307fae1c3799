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

#ifndef TEAMFORM_TEAMFORM_HPP_
#define TEAMFORM_TEAMFORM_HPP_

#include "teamform/assignment.hpp"
#include "teamform/baselines.hpp"
#include "teamform/coordination_graph.hpp"
#include "teamform/errors.hpp"
#include "teamform/greedy_cover.hpp"
#include "teamform/instance.hpp"
#include "teamform/io.hpp"
#include "teamform/metrics.hpp"
#include "teamform/nthreshold.hpp"
#include "teamform/oracle.hpp"
#include "teamform/rng.hpp"
#include "teamform/skill_set.hpp"
#include "teamform/team_assignment.hpp"
#include "teamform/threshold_greedy.hpp"
#include "teamform/threshold_search.hpp"

#endif  // TEAMFORM_TEAMFORM_HPP_
