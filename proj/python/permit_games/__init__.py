# Copyright 2026 The permit-games Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact cooperative analysis of production economies with a capped, taxed permit.

Numbers are returned as ``fractions.Fraction``. Coalitions are lists of
0-based firm indices; characteristic games are dicts keyed by sorted tuples.
"""

from ._core import (
    PartitionGame,
    PreconditionError,
    Scenario,
    ScenarioError,
    Situation,
    SizeLimitError,
    StructuralError,
    apply_rule,
    build_game,
    coalition_value,
    core_nonempty,
    dominance_check,
    dump_scenario,
    example_scenario,
    in_core,
    load_scenario,
    optimal_demand,
    owen_allocation,
    parse_scenario,
    partitions,
    reproduce_examples,
    run_command,
    stable_pipeline,
)

__all__ = [
    "PartitionGame",
    "PreconditionError",
    "Scenario",
    "ScenarioError",
    "Situation",
    "SizeLimitError",
    "StructuralError",
    "apply_rule",
    "build_game",
    "coalition_value",
    "core_nonempty",
    "dominance_check",
    "dump_scenario",
    "example_scenario",
    "in_core",
    "load_scenario",
    "optimal_demand",
    "owen_allocation",
    "parse_scenario",
    "partitions",
    "reproduce_examples",
    "run_command",
    "stable_pipeline",
]
