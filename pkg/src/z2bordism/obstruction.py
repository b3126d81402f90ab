"""Euler-class obstructions to nowhere-zero (and r-frame) sections of n*lambda.

``en_vanishes`` and ``enr_vanishes`` read the obstruction off a profile;
``en_pushforward`` computes the full profile of e_n(M, f) directly from the
descriptor through w(TM - n lambda) = w(M) (1 + w1(lambda))^{-n}.  The two
routes share no code beyond the number evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Partition, binom_mod2, partitions_upto, poly_inverse, poly_pow
from .bordism import CharNumberProfile, evaluate_numbers
from .manifold import ManifoldDescriptor, build_model


@dataclass(frozen=True)
class ObstructionReport:
    vanishes: bool
    witness: Partition | None = None
    q: int | None = None
    checked_count: int = 0

    def __post_init__(self):
        if self.vanishes != (self.witness is None):
            raise ValueError("a report vanishes exactly when it has no witness")


@dataclass(frozen=True)
class RangeFlags:
    transversality_ok: bool
    surgery_ok: bool


def en_vanishes(p: CharNumberProfile, n: int) -> ObstructionReport:
    """e_n = 0 iff every N_J with |J| <= m - n vanishes."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    checked = 0
    for J, bit in p.items():
        if sum(J) > p.m - n:
            break
        checked += 1
        if bit:
            return ObstructionReport(False, J, None, checked)
    return ObstructionReport(True, None, None, checked)


def en_pushforward(d: ManifoldDescriptor, n: int) -> CharNumberProfile:
    """Profile of e_n(M, f) in N_{m-n}(BO(1)); the zero class when n > m."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    target = d.m - n
    parts = partitions_upto(target)
    bits = [0] * len(parts)
    if target < 0:
        return CharNumberProfile(target, ())
    for c in d.components:
        model = build_model(c)
        # w(TM - n lambda); the Euler class w1^n is folded into w1^{m - |J|}
        virtual = model.total_sw * poly_pow(poly_inverse(model.one() + model.w1_lambda), n)
        classes = [virtual.degree_part(j) for j in range(target + 1)]
        for i, b in enumerate(evaluate_numbers(model, classes.__getitem__, parts)):
            bits[i] ^= b
    return CharNumberProfile(target, tuple(bits))


def enr_vanishes(p: CharNumberProfile, n: int, r: int) -> ObstructionReport:
    """e_{n,r} = 0 iff for each q < r with C(n, q) odd, N_J = 0 whenever |J| <= m - n + q.

    The condition sets grow with q, so the witness is the first nonzero N_J
    for the smallest offending q.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= r <= n:
        raise ValueError(f"r must satisfy 1 <= r <= n = {n}, got {r}")
    items = list(p.items())
    checked = 0
    for q in range(r):
        if not binom_mod2(n, q):
            continue
        bound = p.m - n + q
        while checked < len(items) and sum(items[checked][0]) <= bound:
            J, bit = items[checked]
            checked += 1
            if bit:
                return ObstructionReport(False, J, q, checked)
    return ObstructionReport(True, None, None, checked)


def range_flags(m: int, n: int, r: int) -> RangeFlags:
    return RangeFlags(m < 2 * (n - r + 2), m < 2 * (n - r + 1))


def section_exists_rep(d: ManifoldDescriptor, n: int) -> bool:
    """Does n*lambda have a nowhere-zero section on this representative itself?

    Supported for n = 1 (lambda trivial), n = m (w1^m = 0) and n = 2 (w1
    integral; on an RP product the generator of RP(i) is integral only for
    i <= 1, and the Bockstein splits over factors).
    """
    if n not in (1, 2, d.m) or n < 1:
        raise ValueError(f"section test supports n in {{1, 2, m={d.m}}}, got n={n}")
    for c in d.components:
        model = build_model(c)
        if n == d.m:
            ok = not poly_pow(model.w1_lambda, n)
        elif n == 1:
            ok = not model.w1_lambda
        else:
            ok = all(f.dim <= 1 for f in c.factors if f.twisted)
        if not ok:
            return False
    return True


def w1_power_vanishes(d: ManifoldDescriptor, k: int) -> bool:
    """w1(lambda)^k = 0 as a class on every component."""
    return all(not poly_pow(build_model(c).w1_lambda, k) for c in d.components)
