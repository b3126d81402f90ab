"""Coefficients of a class in the free basis  N_m(BO(1)) = sum_k N_k p_{m-k}.

Each coefficient a_k in N_k is described by its Stiefel-Whitney numbers
s_{J'}(a_k), J' a partition of k.  The profile is linear in these unknowns:
a_k p_{m-k} is represented by V x RP(m-k) with lambda pulled back from the
projective factor, so

    N_J(V x RP(m-k)) = sum_{J' |- k} model_number(m, k, J', J) * s_{J'}(V).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import F2Matrix, Partition, as_partition, binom_mod2, partitions_of, partitions_upto, solve_f2
from .bordism import CharNumberProfile
from .obstruction import en_vanishes


@dataclass(frozen=True)
class CoefficientVector:
    """Stiefel-Whitney numbers of a_k, aligned with ``partitions_of(k)``."""

    k: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != len(partitions_of(self.k)):
            raise ValueError(f"coefficient in degree {self.k} needs {len(partitions_of(self.k))} entries")

    @property
    def partitions(self) -> list[Partition]:
        return partitions_of(self.k)

    def __getitem__(self, J: Sequence[int]) -> int:
        return self.bits[self.partitions.index(as_partition(J))]

    def is_zero(self) -> bool:
        return not any(self.bits)


@dataclass(frozen=True)
class DecompositionResult:
    m: int
    coeffs: tuple[CoefficientVector, ...]
    kernel_dim: int
    consistent: bool


@lru_cache(maxsize=None)
def _row(m: int, J: Partition) -> dict[tuple[int, Partition], int]:
    """Nonzero model numbers for a fixed J, keyed by (k, J')."""
    row: dict[tuple[int, Partition], int] = {}
    for us in itertools.product(*(range(j + 1) for j in J)):
        k = sum(us)
        rp = m - k + 1
        if all(binom_mod2(rp, j - u) for j, u in zip(J, us)):
            key = (k, as_partition(u for u in us if u))
            row[key] = row.get(key, 0) ^ 1
    return {key: 1 for key, v in row.items() if v}


def model_number(m: int, k: int, J_prime: Sequence[int], J: Sequence[int]) -> int:
    """Coefficient of s_{J'}(V) in N_J(V x RP(m-k)^H) for dim V = k."""
    J_prime, J = as_partition(J_prime), as_partition(J)
    if sum(J_prime) != k:
        raise ValueError(f"J' = {list(J_prime)} must have weight k = {k}")
    if not 0 <= k <= m or sum(J) > m:
        raise ValueError(f"need 0 <= k <= m and |J| <= m (k={k}, |J|={sum(J)}, m={m})")
    return _row(m, J).get((k, J_prime), 0)


def unknowns(m: int) -> list[tuple[int, Partition]]:
    return [(k, Jp) for k in range(m + 1) for Jp in partitions_of(k)]


@lru_cache(maxsize=None)
def model_matrix(m: int) -> F2Matrix:
    """Rows indexed by ``partitions_upto(m)``, columns by ``unknowns(m)``."""
    cols = {u: i for i, u in enumerate(unknowns(m))}
    bits = []
    for J in partitions_upto(m):
        bits.append(sum(1 << cols[key] for key in _row(m, J)))
    return F2Matrix(len(bits), len(cols), tuple(bits))


def decompose(p: CharNumberProfile) -> DecompositionResult:
    if p.m < 0:
        raise ValueError("cannot decompose a class in negative dimension")
    A = model_matrix(p.m)
    sol = solve_f2(A, p.bits)
    if not sol.consistent:
        return DecompositionResult(p.m, (), sol.kernel_dim, False)
    coeffs = []
    i = 0
    for k in range(p.m + 1):
        size = len(partitions_of(k))
        coeffs.append(CoefficientVector(k, sol.x[i : i + size]))
        i += size
    return DecompositionResult(p.m, tuple(coeffs), sol.kernel_dim, True)


def recompose(m: int, coeffs: Sequence[CoefficientVector]) -> CharNumberProfile:
    """The profile of sum_k a_k p_{m-k} for the given coefficient numbers."""
    x = [b for c in sorted(coeffs, key=lambda c: c.k) for b in c.bits]
    return CharNumberProfile(m, model_matrix(m).apply(x))


def low_coeffs_vanish(p: CharNumberProfile, n: int) -> bool:
    """a_k = 0 for all k <= m - n; read off the profile without solving."""
    return en_vanishes(p, n).vanishes
