# Copyright 2026 The PSMC Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Partial set multi-cover: greedy bicriteria solver, MDSC approximation and exact oracles."""

import json

from ._core import (
    BoundViolation,
    BudgetExceeded,
    DegenerateY,
    Error,
    Infeasible,
    Instance,
    InvalidInstance,
    IterationLimit,
    ParseError,
    RetryExhausted,
    SolverStalled,
    SubCollection,
    bucketize,
    coverage,
    exact_mdsc,
    exact_multicover,
    exact_psmc,
    feasibility_check,
    gen_3dm,
    gen_appendix_flaw,
    gen_example1,
    gen_example42,
    gen_random,
    multicover_greedy,
    planted_matching,
)
from . import _core


def greedy_solve(instance, epsilon, mdsc="exact"):
    """Run the greedy bicriteria driver; returns {"solution": ..., "trace": ...}."""
    return json.loads(_core._greedy_solve(instance, epsilon, mdsc))


def verify_bicriteria(instance, epsilon):
    """Greedy with exact MDSC checked against the exact PSMC optimum."""
    return json.loads(_core._verify_bicriteria(instance, epsilon))


def solve_natural_lp(instance):
    return json.loads(_core._solve_natural_lp(instance))


def solve_lp1(instance):
    return json.loads(_core._solve_lp1(instance))


def mdsc_approx_solve(instance, exact_multicover=False):
    return json.loads(_core._mdsc_approx_solve(instance, exact_multicover))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
