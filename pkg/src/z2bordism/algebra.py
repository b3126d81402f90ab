"""Exact F_2 algebra: truncated polynomials, mod-2 binomials, partitions, linear solving.

Everything here is immutable and side-effect free.  Partitions are plain
tuples of positive integers in nonincreasing order; the empty tuple is the
empty partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Partition = tuple[int, ...]
Monomial = tuple[int, ...]


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 by Lucas: odd iff the bits of k are a subset of the bits of n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom_mod2 needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return 0
    return int(k & ~n == 0)


# ---------------------------------------------------------------------------
# partitions


@lru_cache(maxsize=None)
def _partitions(d: int, max_part: int) -> tuple[Partition, ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(d: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``d`` with parts <= ``max_part``, lexicographically decreasing.

    >>> partitions_of(3)
    [(3,), (2, 1), (1, 1, 1)]
    """
    if d < 0:
        raise ValueError(f"cannot partition a negative integer ({d})")
    if max_part is None:
        max_part = d
    return list(_partitions(d, max(max_part, 0)))


@lru_cache(maxsize=None)
def partitions_upto(w: int) -> tuple[Partition, ...]:
    """Canonical profile order: weight ascending, each weight lexicographically decreasing.

    A negative ``w`` gives no partitions at all.
    """
    out: list[Partition] = []
    for d in range(w + 1):
        out.extend(_partitions(d, d))
    return tuple(out)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalise to a sorted partition, rejecting nonpositive parts."""
    parts = tuple(sorted(parts, reverse=True))
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be >= 1, got {list(parts)}")
    return parts


# ---------------------------------------------------------------------------
# truncated polynomials over F_2


@dataclass(frozen=True)
class TruncatedPoly:
    """Element of F_2[x_1..x_k]/(x_i^{b_i}), stored as the set of its monomials."""

    bounds: tuple[int, ...]
    terms: frozenset[Monomial] = frozenset()

    def __post_init__(self):
        if any(b < 1 for b in self.bounds):
            raise ValueError(f"bounds must be >= 1, got {self.bounds}")
        k = len(self.bounds)
        for t in self.terms:
            if len(t) != k or any(e < 0 or e >= b for e, b in zip(t, self.bounds)):
                raise ValueError(f"monomial {t} outside ring with bounds {self.bounds}")

    @property
    def num_vars(self) -> int:
        return len(self.bounds)

    @classmethod
    def zero(cls, bounds: Sequence[int]) -> TruncatedPoly:
        return cls(tuple(bounds))

    @classmethod
    def one(cls, bounds: Sequence[int]) -> TruncatedPoly:
        return cls(tuple(bounds), frozenset([(0,) * len(bounds)]))

    @classmethod
    def var(cls, bounds: Sequence[int], i: int) -> TruncatedPoly:
        """The generator x_i (zero if x_i itself is truncated away, i.e. bound 1)."""
        bounds = tuple(bounds)
        if bounds[i] < 2:
            return cls(bounds)
        mono = tuple(1 if j == i else 0 for j in range(len(bounds)))
        return cls(bounds, frozenset([mono]))

    @classmethod
    def from_monomials(cls, bounds: Sequence[int], monos: Iterable[Sequence[int]]) -> TruncatedPoly:
        """Sum of monomials with F_2 cancellation; exponents past a bound are dropped."""
        bounds = tuple(bounds)
        acc: set[Monomial] = set()
        for m in monos:
            m = tuple(m)
            if any(e >= b for e, b in zip(m, bounds)):
                continue
            acc ^= {m}
        return cls(bounds, frozenset(acc))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: TruncatedPoly) -> None:
        if self.bounds != other.bounds:
            raise ValueError(f"ring mismatch: bounds {self.bounds} vs {other.bounds}")

    def __add__(self, other: TruncatedPoly) -> TruncatedPoly:
        self._check(other)
        return TruncatedPoly(self.bounds, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: TruncatedPoly) -> TruncatedPoly:
        return poly_mul(self, other)

    def __pow__(self, e: int) -> TruncatedPoly:
        if e < 0:
            return poly_pow(poly_inverse(self), -e)
        return poly_pow(self, e)

    def degree_part(self, d: int) -> TruncatedPoly:
        return TruncatedPoly(self.bounds, frozenset(t for t in self.terms if sum(t) == d))

    def coefficient(self, mono: Sequence[int]) -> int:
        return int(tuple(mono) in self.terms)

    def constant_term(self) -> int:
        return self.coefficient((0,) * self.num_vars)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = []
        for t in sorted(self.terms, key=lambda t: (sum(t), tuple(-e for e in t))):
            factors = []
            for i, e in enumerate(t):
                if e == 1:
                    factors.append(f"a{i + 1}")
                elif e > 1:
                    factors.append(f"a{i + 1}^{e}")
            names.append("*".join(factors) or "1")
        return " + ".join(names)


def poly_mul(p: TruncatedPoly, q: TruncatedPoly) -> TruncatedPoly:
    """Product in the truncated ring; overflowing monomials vanish immediately."""
    p._check(q)
    bounds = p.bounds
    acc: set[Monomial] = set()
    for s in p.terms:
        for t in q.terms:
            prod = tuple(a + b for a, b in zip(s, t))
            if any(e >= b for e, b in zip(prod, bounds)):
                continue
            if prod in acc:
                acc.remove(prod)
            else:
                acc.add(prod)
    return TruncatedPoly(bounds, frozenset(acc))


def poly_pow(p: TruncatedPoly, e: int) -> TruncatedPoly:
    if e < 0:
        raise ValueError("use poly_inverse for negative powers")
    result = TruncatedPoly.one(p.bounds)
    base = p
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def poly_inverse(p: TruncatedPoly) -> TruncatedPoly:
    """Inverse of a unit 1 + x as the (finite) geometric series 1 + x + x^2 + ..."""
    if not p.constant_term():
        raise ZeroDivisionError(f"{p} has constant term 0 and is not invertible")
    one = TruncatedPoly.one(p.bounds)
    x = p + one
    acc = TruncatedPoly.zero(p.bounds)
    term = one
    while term:
        acc = acc + term
        term = term * x
    return acc


# ---------------------------------------------------------------------------
# F_2 linear algebra


@dataclass(frozen=True)
class F2Matrix:
    """Dense F_2 matrix; row i is an int whose bit j is entry (i, j)."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.bits)}")
        limit = 1 << self.cols
        if any(r < 0 or r >= limit for r in self.bits):
            raise ValueError(f"row has entries beyond column {self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> F2Matrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        bits = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("matrix is not rectangular")
            bits.append(sum(1 << j for j, v in enumerate(r) if v % 2))
        return cls(len(rows), cols, tuple(bits))

    def entry(self, i: int, j: int) -> int:
        return (self.bits[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.cols:
            raise ValueError(f"vector length {len(x)} != {self.cols} columns")
        xv = sum(1 << j for j, v in enumerate(x) if v % 2)
        return tuple(bin(r & xv).count("1") & 1 for r in self.bits)


@dataclass(frozen=True)
class F2Solution:
    consistent: bool
    x: tuple[int, ...] | None
    kernel_dim: int
    kernel_basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]


def solve_f2(A: F2Matrix, b: Sequence[int]) -> F2Solution:
    """Solve A x = b over F_2 by Gauss-Jordan elimination.

    Pivots are taken in increasing column order, each from the lowest-index
    available row.  Free variables are set to zero in the returned solution.
    An inconsistent system is reported through ``consistent=False``.
    """
    if len(b) != A.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {A.rows} rows")
    n = A.cols
    aug = [r | ((b[i] & 1) << n) for i, r in enumerate(A.bits)]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        mask = 1 << col
        pr = next((i for i in range(row, len(aug)) if aug[i] & mask), None)
        if pr is None:
            continue
        aug[row], aug[pr] = aug[pr], aug[row]
        for i in range(len(aug)):
            if i != row and aug[i] & mask:
                aug[i] ^= aug[row]
        pivots.append(col)
        row += 1
        if row == len(aug):
            break

    rhs_bit = 1 << n
    consistent = all(not (r & rhs_bit) for r in aug[row:])
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]

    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, pc in enumerate(pivots):
            if (aug[i] >> f) & 1:
                v[pc] = 1
        basis.append(tuple(v))

    x = None
    if consistent:
        xs = [0] * n
        for i, pc in enumerate(pivots):
            xs[pc] = (aug[i] >> n) & 1
        x = tuple(xs)
    return F2Solution(consistent, x, len(free), tuple(basis), tuple(pivots))
