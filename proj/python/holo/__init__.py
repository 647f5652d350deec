"""Python interface to the holo library.

Every function takes plain Python data (dicts, lists, rational strings) and
returns the same JSON report the ``holo`` command line prints, as a dict.
"""

import json

from . import _core

__version__ = _core.version

__all__ = [
    "ClassificationError",
    "bracket",
    "boundary_act",
    "chart_of_line",
    "check_wi",
    "classify",
    "closure",
    "line_of_chart",
    "make",
    "selftest",
    "transport",
]


class ClassificationError(ValueError):
    """The algebra is not of any type: ``reason`` is one of
    NotWeaklyIrreducible, EmptyAlgebra, NotInNormalPosition."""

    def __init__(self, reason, message, report):
        super().__init__(message)
        self.reason = reason
        self.report = report


def _dump(data):
    return data if isinstance(data, str) else json.dumps(data)


def closure(algebra, seed=0, budget=64):
    return json.loads(_core.closure(_dump(algebra), seed, budget)[0])


def check_wi(algebra, seed=0, budget=64):
    """Report with ``verdict`` WEAKLY_IRREDUCIBLE or REDUCIBLE and both deciders' results."""
    return json.loads(_core.check_wi(_dump(algebra), seed, budget)[0])


def classify(algebra, seed=0, budget=64):
    text, status = _core.classify(_dump(algebra), seed, budget)
    report = json.loads(text)
    if status != 0:
        err = report["error"]
        raise ClassificationError(err["reason"], err["message"], report)
    return report


def boundary_act(data, tol=1e-9):
    return json.loads(_core.boundary_act(_dump(data), tol)[0])


def transport(data, tol=1e-9):
    return json.loads(_core.transport(_dump(data), tol)[0])


def make(type, B="0", n=2, surjective=True, seed=0):
    return json.loads(_core.make(type, B, n, surjective, seed)[0])


def selftest(seed=0, budget=64, scale=0.2):
    text, _status, _log = _core.selftest(seed, budget, scale)
    return json.loads(text)


def bracket(n, u, v):
    return json.loads(_core.bracket(json.dumps({"n": n, "u": u, "v": v})))


def chart_of_line(n, v):
    return json.loads(_core.chart_of_line(n, json.dumps(v)))


def line_of_chart(n, Y):
    return json.loads(_core.line_of_chart(n, json.dumps(Y)))
