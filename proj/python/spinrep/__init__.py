"""Exact Spin module computations for orthogonal Lie algebra representations.

Every function returns the JSON document the ``spinrep`` command prints,
parsed into Python objects. Weights are lists of fundamental-weight labels
in the library's internal numbering (Bourbaki, except F4 which is reversed).
"""

import json

from . import _core
from ._core import BudgetExceeded, VerificationFailure

__all__ = [
    "BudgetExceeded",
    "VerificationFailure",
    "spin",
    "poincare",
    "classify",
    "rootsys",
    "grading",
    "grading_names",
    "suite_names",
    "verify",
]


def spin(type, labels, with_dual=False, **budget):
    """Orthogonality, Spin0 decomposition and extreme weights of V(labels)."""
    return json.loads(_core.spin_report(type, list(labels), with_dual, **budget))


def poincare(type, labels, with_dual=False, **budget):
    """Graded invariants of the exterior algebra of V(labels)."""
    return json.loads(_core.poincare(type, list(labels), with_dual, **budget))


def classify(rank_bound, height_bound, jobs=1, **budget):
    """Co-primary sweep over simple types with the deciding stage per candidate."""
    return json.loads(_core.classify(rank_bound, height_bound, jobs, **budget))


def rootsys(type):
    return json.loads(_core.rootsys(type))


def grading(name, **budget):
    """Spin(g1) of a symmetric pair from the catalog, e.g. ``"F4/B4"``."""
    return json.loads(_core.grading(name, **budget))


def grading_names():
    return _core.grading_names()


def suite_names():
    return _core.suite_names()


def verify(suite, jobs=1, **budget):
    """Run a verification suite; the result lists every check with its status."""
    return json.loads(_core.run_suite(suite, jobs, **budget))
