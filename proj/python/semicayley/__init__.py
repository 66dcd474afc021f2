# Copyright 2026 The semicayley Authors
#
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
"""Semi-Cayley graphs over finite abelian groups.

Thin wrapper over the compiled extension: JSON reports come back as
Python objects, vertices are written ``"[[exponents],layer]"`` or as
``(exponents, layer)`` tuples.
"""

import json

from . import _semicayley
from ._semicayley import (
    ConsistencyError,
    Spec,
    ValidationError,
    block_transfer_rl,
    eigenvalues,
    oracle_expm,
    transfer_matrix,
)

__all__ = [
    "ConsistencyError",
    "Spec",
    "ValidationError",
    "block_transfer_rl",
    "decide",
    "eigenvalues",
    "family",
    "find_pst",
    "nu2",
    "oracle_expm",
    "periodicity",
    "run",
    "spec",
    "spectrum",
    "transfer_entry",
    "transfer_matrix",
    "verify_at_time",
]


def _vertex(v):
    if isinstance(v, str):
        return v
    exps, layer = v
    return json.dumps([list(exps), layer], separators=(",", ":"))


def spec(factors, R, L, S):
    """SC(G, R, L, S) with G = Z_{factors[0]} x ... ."""
    return Spec(json.dumps({"group": {"factors": list(factors)},
                            "R": [list(x) for x in R],
                            "L": [list(x) for x in L],
                            "S": [list(x) for x in S]}))


def family(name, **params):
    return _semicayley.family(name, json.dumps(params))


def spectrum(s):
    return json.loads(_semicayley.spectrum_json(s))


def transfer_entry(s, u, v, t):
    return _semicayley.transfer_entry(s, _vertex(u), _vertex(v), t)


def decide(s, u, v):
    return json.loads(_semicayley.decide_json(s, _vertex(u), _vertex(v)))


def find_pst(s, tol=1e-8):
    return json.loads(_semicayley.find_pst_json(s, tol))


def periodicity(s):
    return json.loads(_semicayley.periodicity_json(s))


def verify_at_time(s, u, v, t, tol=1e-8):
    return json.loads(_semicayley.verify_at_time_json(s, _vertex(u), _vertex(v), t, tol))


def nu2(numerator, denominator=1):
    """2-adic valuation of numerator/denominator; None stands for infinity."""
    return _semicayley.nu2(numerator, denominator)


def run(job):
    """Runs a CLI job (dict); returns (exit_code, report)."""
    code, out = _semicayley.run_job(json.dumps(job))
    return code, json.loads(out) if job.get("format", "json") == "json" else out
