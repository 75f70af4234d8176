#
# surjvcsp/__init__.py
#
# flake8: noqa
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
"""
Exact algorithms for surjective Boolean valued constraint satisfaction.

A surjective assignment must use both labels 0 and 1. This package
decides, for a finite language of weighted relations, whether minimising
over surjective assignments is tractable, and solves instances over the
tractable essentially-downset (EDS) languages by a reduction to
Generalised Min-Cut: a superadditive set function plus a graph cut,
whose optimal and near-optimal solutions are enumerated exactly.

Values are exact rationals (``fractions.Fraction``) extended with the
single infinite value ``INF``. Start with `surjvcsp.core` for relations
and instances, `classify_language` for the tractability verdict, and
`solve_surjective` for solving; brute force references live in
`surjvcsp.oracle`.
"""

from .__meta__ import (
    version as __version__,
    author as __author__,
    date as __date__,
    copyright as __copyright__,
    license as __license__,
)

from .core import (
    INF,
    Assignment,
    Constraint,
    Instance,
    Language,
    Relation,
    WeightedRelation,
)
from .classify import (
    Verdict,
    classify_language,
    min_alpha_eds,
)
from .gmc import GmcInstance
from .edsapprox import instance_gmc
from .results import SolveResult
from .solver import (
    solve_surjective,
    enumerate_optimal_surjective,
    fixup_surjective,
)
from .errors import SurjError

__all__ = [
    "INF",
    "Assignment",
    "Constraint",
    "Instance",
    "Language",
    "Relation",
    "WeightedRelation",
    "Verdict",
    "classify_language",
    "min_alpha_eds",
    "GmcInstance",
    "instance_gmc",
    "SolveResult",
    "solve_surjective",
    "enumerate_optimal_surjective",
    "fixup_surjective",
    "SurjError",
]
