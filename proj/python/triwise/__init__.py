"""Exact and interval tools for 3-wise t-intersecting families under the p-biased measure.

Families are dicts ``{"n": int, "members": [[elements...], ...]}`` with
1-based elements, the same layout the command-line tool reads and writes.
Probabilities may be given as ``Fraction``, ``int`` or ``"a/b"`` strings;
exact results come back as ``Fraction`` and interval results as
``(lower, upper)`` decimal-string pairs inside the returned dicts.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from . import _core
from ._core import CapabilityError, DomainError, InconclusiveError, ParseError, PreconditionError

__all__ = [
    "CapabilityError",
    "DomainError",
    "InconclusiveError",
    "ParseError",
    "PreconditionError",
    "family",
    "p_measure",
    "frontier_family",
    "frontier_measure",
    "intersecting_check",
    "is_intersecting",
    "up_closure",
    "minimal_generators",
    "canonical_form",
    "shift_saturate",
    "is_shifted",
    "classify_walk",
    "count_walks",
    "alpha",
    "p0",
    "p0_exact",
    "compare_with_p0",
    "threshold_params",
    "claim_ids",
    "verify_claim",
    "search_max_measure",
    "audit_lemmas",
    "stability_constants",
    "stability_audit",
]

Family = Mapping[str, Any]


def _q(value: Fraction | int | str) -> str:
    if isinstance(value, str):
        return value
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _fam(f: Family) -> str:
    return json.dumps(dict(f))


def family(n: int, members: Iterable[Iterable[int]]) -> dict:
    """Builds a family dict from a ground size and member element lists."""
    return {"n": n, "members": [sorted(m) for m in members]}


def p_measure(f: Family, p) -> Fraction:
    return _fraction(_core.p_measure(_fam(f), _q(p)))


def frontier_family(s: int, t: int, n: int) -> dict:
    return json.loads(_core.frontier_family(s, t, n))


def frontier_measure(s: int, t: int, p, n: int) -> Fraction:
    return _fraction(_core.frontier_measure(s, t, _q(p), n))


def intersecting_check(f: Family, r: int = 3, t: int = 1) -> dict:
    return json.loads(_core.intersecting_check(_fam(f), r, t))


def is_intersecting(f: Family, r: int = 3, t: int = 1) -> bool:
    return bool(intersecting_check(f, r, t)["holds"])


def up_closure(f: Family) -> dict:
    return json.loads(_core.up_closure(_fam(f)))


def minimal_generators(f: Family) -> dict:
    return json.loads(_core.minimal_generators(_fam(f)))


def canonical_form(f: Family) -> str:
    return _core.canonical_form(_fam(f))


def shift_saturate(f: Family) -> dict:
    return json.loads(_core.shift_saturate(_fam(f)))


def is_shifted(f: Family) -> bool:
    return _core.is_shifted(_fam(f))


def classify_walk(n: int, elements: Sequence[int], t: int) -> str:
    return _core.classify_walk(n, list(elements), t)


def count_walks(s: int, t: int) -> int:
    """Walks from the origin to (s, 2s + t) that never touch y = 2x + t + 1."""
    return int(_core.f_closed(s, t))


def alpha(p, precision: int = 128) -> dict:
    return json.loads(_core.alpha(_q(p), precision))


def p0(t: int, precision: int = 128) -> dict:
    return json.loads(_core.p0(t, precision))


def p0_exact(t: int) -> Fraction | None:
    v = _core.p0_exact(t)
    return None if v is None else _fraction(v)


def compare_with_p0(p, t: int) -> int:
    return _core.compare_with_p0(_q(p), t)


def threshold_params(t: int) -> dict:
    return json.loads(_core.threshold_params(t))


def claim_ids() -> list[str]:
    return list(_core.claim_ids())


def verify_claim(claim_id: str, t_min: int | None = None, t_max: int | None = None,
                 grid_points: int = 512, include_points: bool = False) -> dict:
    return json.loads(_core.run_check(claim_id, t_min, t_max, grid_points, include_points=include_points))


def search_max_measure(n: int, t: int, p_list: Iterable, r: int = 3, restrict_to_shifted: bool = False,
                       isomorphism_pruning: bool = True, bound_pruning: bool = True, threads: int = 1) -> list[dict]:
    return json.loads(_core.search_max_measure(n, t, r, [_q(p) for p in p_list], restrict_to_shifted,
                                               isomorphism_pruning, bound_pruning, threads))


def audit_lemmas(f: Family, t: int) -> dict:
    return json.loads(_core.audit_lemmas(_fam(f), t))


def stability_constants(t: int, p) -> dict:
    return json.loads(_core.stability_constants(t, _q(p)))


def stability_audit(f: Family, t: int, p) -> dict:
    return json.loads(_core.stability_audit(_fam(f), t, _q(p)))
