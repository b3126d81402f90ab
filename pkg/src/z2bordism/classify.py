"""Borsuk-Ulam trichotomy for a free Z/2-bordism class and a codomain R^n.

ALL: every representative has the property; MIXED: some do and some do not;
NONE: no representative has it.  By default "representative" means one with
connected total space X = S(lambda).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .algebra import Partition
from .bordism import CharNumberProfile, profile
from .manifold import ManifoldDescriptor
from .obstruction import en_vanishes

RULE_N_GT_M = "Introduction: n > m"
RULE_N_EQ_1 = "Introduction: n = 1"
RULE_EN_NONZERO = "Theorem 1.4(ii)"
RULE_EN_ZERO = "Theorem 1.4(i),(iii)"
RULE_A0_ONE = "Theorem 1.2(iii)"
RULE_A0_ZERO = "Theorem 1.2(iv)"
RULE_M1 = "Remark 3.2"

NOTE_CONNECTED = (
    "connected representatives only; a disconnected representative obtained by "
    "adjoining two antipodal spheres satisfies the property"
)
NOTE_DISCONNECTED = (
    "connected representatives fail; adjoining two antipodal spheres (a null-bordant pair) "
    "gives a disconnected representative that satisfies the property"
)
NOTE_M1_ZERO = "the only connected representative of 0 has trivial lambda and disconnected S(lambda)"


class Case(str, enum.Enum):
    ALL = "ALL"
    MIXED = "MIXED"
    NONE = "NONE"


@dataclass(frozen=True)
class ClassificationResult:
    m: int
    n: int
    case: Case
    witness: Partition | None
    rule: str
    notes: tuple[str, ...] = field(default=())


def _as_profile(source: ManifoldDescriptor | CharNumberProfile) -> CharNumberProfile:
    if isinstance(source, CharNumberProfile):
        return source
    return profile(source)


def classify(
    source: ManifoldDescriptor | CharNumberProfile,
    n: int,
    connected_only: bool = True,
) -> ClassificationResult:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = _as_profile(source)
    m = p.m
    if m < 1:
        raise ValueError(f"classification needs m >= 1, got m = {m}")
    if m == 1:
        return classify_m1(p, n, connected_only)
    if n > m:
        return ClassificationResult(m, n, Case.NONE, None, RULE_N_GT_M)
    if n == 1:
        return ClassificationResult(m, n, Case.ALL, None, RULE_N_EQ_1)
    if n < m:
        report = en_vanishes(p, n)
        if not report.vanishes:
            return ClassificationResult(m, n, Case.ALL, report.witness, RULE_EN_NONZERO)
        return ClassificationResult(m, n, Case.MIXED, None, RULE_EN_ZERO)
    # n == m: a0 = N_empty decides
    if p[()]:
        return ClassificationResult(m, n, Case.ALL, (), RULE_A0_ONE)
    if connected_only:
        return ClassificationResult(m, n, Case.NONE, None, RULE_A0_ZERO, (NOTE_CONNECTED,))
    return ClassificationResult(
        m, n, Case.MIXED, None, RULE_A0_ZERO + "; sphere adjunction", (NOTE_DISCONNECTED,)
    )


def classify_m1(
    source: ManifoldDescriptor | CharNumberProfile,
    n: int,
    connected_only: bool = True,
) -> ClassificationResult:
    """Dimension one: N_1(BO(1)) = {0, p_1}, told apart by w1(lambda)[M]."""
    p = _as_profile(source)
    if p.m != 1:
        raise ValueError(f"classify_m1 needs m = 1, got m = {p.m}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > 1:
        return ClassificationResult(1, n, Case.NONE, None, RULE_N_GT_M)
    if p[()]:
        # odd number of twisted circles, so w1(lambda) != 0 on every representative
        return ClassificationResult(1, n, Case.ALL, (), RULE_M1)
    if connected_only:
        return ClassificationResult(1, n, Case.NONE, None, RULE_M1, (NOTE_M1_ZERO,))
    return ClassificationResult(1, n, Case.MIXED, None, RULE_M1, (NOTE_DISCONNECTED,))


def bup_index(source: ManifoldDescriptor | CharNumberProfile) -> int:
    """Largest n for which every representative has the property (m > 1)."""
    p = _as_profile(source)
    if p.m <= 1:
        raise ValueError(f"bup_index needs m > 1, got m = {p.m}")
    best = 1
    for n in range(1, p.m + 1):
        if classify(p, n).case is Case.ALL:
            best = n
    return best


def downward_closed(results: list[ClassificationResult]) -> bool:
    """ALL at some n must imply ALL at every smaller n in the same sweep."""
    all_ns = {r.n for r in results if r.case is Case.ALL}
    present = {r.n for r in results}
    return all(k in all_ns for n in all_ns for k in range(1, n) if k in present)
