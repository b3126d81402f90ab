"""Characteristic-number profiles of classes in N_m(BO(1)).

The number indexed by a partition J = (j_1, ..., j_s) is

    N_J = w_{j_1}(M) ... w_{j_s}(M) w1(lambda)^{m - |J|} [M],

and the dense vector of all N_J with |J| <= m determines the bordism class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .algebra import Partition, TruncatedPoly, as_partition, partitions_upto, poly_pow
from .manifold import CohomologyModel, ManifoldDescriptor, build_model, pair_product


@dataclass(frozen=True)
class CharNumberProfile:
    """Dense partition-indexed F_2 vector, aligned with ``partitions_upto(m)``.

    ``m`` may be negative; that is the canonical zero class in negative
    dimension, with no entries.
    """

    m: int
    bits: tuple[int, ...]

    def __post_init__(self):
        expected = len(partitions_upto(self.m))
        if len(self.bits) != expected:
            raise ValueError(f"profile at m={self.m} needs {expected} entries, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("profile entries must be 0 or 1")

    @classmethod
    def zero(cls, m: int) -> CharNumberProfile:
        return cls(m, (0,) * len(partitions_upto(m)))

    @classmethod
    def from_mapping(cls, m: int, values: dict) -> CharNumberProfile:
        """Build from ``{partition: bit}``; every partition of weight <= m must be present."""
        norm = {as_partition(k): v for k, v in values.items()}
        parts = partitions_upto(m)
        missing = [J for J in parts if J not in norm]
        if missing:
            raise ValueError(f"profile is missing entries, e.g. J={list(missing[0])}")
        extra = set(norm) - set(parts)
        if extra:
            raise ValueError(f"profile has entries of weight > {m}: {sorted(extra)[:3]}")
        return cls(m, tuple(int(norm[J]) for J in parts))

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return partitions_upto(self.m)

    def __getitem__(self, J: Sequence[int]) -> int:
        return self.bits[_index(self.m)[as_partition(J)]]

    def items(self) -> Iterator[tuple[Partition, int]]:
        return zip(self.partitions, self.bits)

    def is_zero(self) -> bool:
        return not any(self.bits)

    def __add__(self, other: CharNumberProfile) -> CharNumberProfile:
        return profile_add(self, other)


_index_cache: dict[int, dict[Partition, int]] = {}


def _index(m: int) -> dict[Partition, int]:
    idx = _index_cache.get(m)
    if idx is None:
        idx = {J: i for i, J in enumerate(partitions_upto(m))}
        _index_cache[m] = idx
    return idx


def evaluate_numbers(
    model: CohomologyModel,
    classes: Callable[[int], TruncatedPoly],
    partitions: Sequence[Partition],
) -> list[int]:
    """Evaluate  c_{j_1} ... c_{j_s} w1(lambda)^{dim - |J|} [M]  for each J.

    ``partitions`` must list every prefix of a partition before the partition
    itself (canonical order does); products are built incrementally from the
    prefix.
    """
    m = model.dim
    w1 = model.w1_lambda
    powers = [model.one()]
    for _ in range(m):
        powers.append(powers[-1] * w1)
    prods: dict[Partition, TruncatedPoly] = {(): model.one()}
    out = []
    for J in partitions:
        if J not in prods:
            prods[J] = prods[J[:-1]] * classes(J[-1])
        out.append(pair_product(model, prods[J], powers[m - sum(J)]))
    return out


def component_profile(model: CohomologyModel, m: int) -> list[int]:
    return evaluate_numbers(model, model.w, partitions_upto(m))


def _check_partition(J: Sequence[int], m: int) -> Partition:
    J = as_partition(J)
    if sum(J) > m:
        raise ValueError(f"partition {list(J)} has weight {sum(J)} > m = {m}")
    return J


def char_number(d: ManifoldDescriptor, J: Sequence[int]) -> int:
    J = _check_partition(J, d.m)
    bit = 0
    for c in d.components:
        model = build_model(c)
        prod = model.one()
        for j in J:
            prod = prod * model.w(j)
        bit ^= pair_product(model, prod, poly_pow(model.w1_lambda, d.m - sum(J)))
    return bit


def profile(d: ManifoldDescriptor) -> CharNumberProfile:
    bits = [0] * len(partitions_upto(d.m))
    for c in d.components:
        for i, b in enumerate(component_profile(build_model(c), d.m)):
            bits[i] ^= b
    return CharNumberProfile(d.m, tuple(bits))


def a0(d: ManifoldDescriptor) -> int:
    """Coefficient of p_m in the basis expansion, i.e. w1(lambda)^m [M]."""
    return char_number(d, ())


def profile_add(p: CharNumberProfile, q: CharNumberProfile) -> CharNumberProfile:
    if p.m != q.m:
        raise ValueError(f"dimension mismatch ({p.m} vs {q.m})")
    return CharNumberProfile(p.m, tuple(a ^ b for a, b in zip(p.bits, q.bits)))


def bordant_eq(d1: ManifoldDescriptor, d2: ManifoldDescriptor) -> bool:
    if d1.m != d2.m:
        raise ValueError(f"dimension mismatch ({d1.m} vs {d2.m})")
    return profile(d1) == profile(d2)
