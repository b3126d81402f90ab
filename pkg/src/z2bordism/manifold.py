"""Manifold descriptors built from real projective spaces.

A descriptor is a formal disjoint union of products RP(i_1) x ... x RP(i_k),
each factor optionally carrying its Hopf line bundle.  The line bundle lambda
over a component is the tensor product of the Hopf bundles of its twisted
factors, so w1(lambda) is the sum of the corresponding generators.  The free
involution is the antipodal map on the sphere bundle of lambda and is never
built explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal

from .algebra import TruncatedPoly, poly_pow


@dataclass(frozen=True)
class ProjectiveFactor:
    dim: int
    twisted: bool = False

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"RP dimension must be >= 0, got {self.dim}")

    def to_expr(self) -> str:
        return f"RP({self.dim})" + ("^H" if self.twisted else "")


@dataclass(frozen=True)
class Component:
    factors: tuple[ProjectiveFactor, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a component needs at least one factor")

    @classmethod
    def of(cls, *factors: ProjectiveFactor | tuple[int, bool] | int) -> Component:
        """Shorthand: ``Component.of((1, False), (2, True))`` or ``Component.of(3)``."""
        out = []
        for f in factors:
            if isinstance(f, ProjectiveFactor):
                out.append(f)
            elif isinstance(f, int):
                out.append(ProjectiveFactor(f))
            else:
                out.append(ProjectiveFactor(*f))
        return cls(tuple(out))

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    def to_expr(self) -> str:
        return "*".join(f.to_expr() for f in self.factors)


@dataclass(frozen=True)
class ManifoldDescriptor:
    m: int
    components: tuple[Component, ...] = ()

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"dimension must be >= 0, got {self.m}")
        for c in self.components:
            if c.dim != self.m:
                raise ValueError(f"component {c.to_expr()} has dimension {c.dim}, expected {self.m}")

    @classmethod
    def empty(cls, m: int) -> ManifoldDescriptor:
        return cls(m)

    @classmethod
    def from_components(cls, components: Iterable[Component]) -> ManifoldDescriptor:
        components = tuple(components)
        if not components:
            raise ValueError("cannot infer dimension of an empty component list; use empty(m)")
        return cls(components[0].dim, components)

    def to_expr(self) -> str:
        if not self.components:
            return f"0({self.m})"
        return " + ".join(c.to_expr() for c in self.components)

    def __add__(self, other: ManifoldDescriptor) -> ManifoldDescriptor:
        return disjoint_union(self, other)


@dataclass(frozen=True)
class CohomologyModel:
    """H*(component; Z/2) with its total Stiefel-Whitney class and w1(lambda).

    One variable per factor, in factor order; the variable of RP(i) has
    bound i + 1.
    """

    bounds: tuple[int, ...]
    total_sw: TruncatedPoly
    w1_lambda: TruncatedPoly
    sw: tuple[TruncatedPoly, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return sum(b - 1 for b in self.bounds)

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(b - 1 for b in self.bounds)

    def w(self, j: int) -> TruncatedPoly:
        """The Stiefel-Whitney class w_j of the component (zero above its dimension)."""
        if j < 0:
            raise ValueError("negative degree")
        if j >= len(self.sw):
            return TruncatedPoly.zero(self.bounds)
        return self.sw[j]

    def one(self) -> TruncatedPoly:
        return TruncatedPoly.one(self.bounds)


@lru_cache(maxsize=4096)
def build_model(c: Component) -> CohomologyModel:
    bounds = tuple(f.dim + 1 for f in c.factors)
    one = TruncatedPoly.one(bounds)
    total = one
    w1 = TruncatedPoly.zero(bounds)
    for t, f in enumerate(c.factors):
        a = TruncatedPoly.var(bounds, t)
        total = total * poly_pow(one + a, f.dim + 1)
        if f.twisted:
            w1 = w1 + a
    sw = tuple(total.degree_part(j) for j in range(c.dim + 1))
    return CohomologyModel(bounds, total, w1, sw)


def fundamental_pair(model: CohomologyModel, p: TruncatedPoly) -> int:
    """Evaluate a class on the fundamental class: its top-monomial coefficient."""
    if p.bounds != model.bounds:
        raise ValueError(f"ring mismatch: bounds {p.bounds} vs model {model.bounds}")
    return p.coefficient(model.top)


def pair_product(model: CohomologyModel, p: TruncatedPoly, q: TruncatedPoly) -> int:
    """``fundamental_pair(model, p * q)`` without forming the product."""
    top = model.top
    qt = q.terms
    bit = 0
    for s in p.terms:
        if tuple(a - b for a, b in zip(top, s)) in qt:
            bit ^= 1
    return bit


def disjoint_union(d1: ManifoldDescriptor, d2: ManifoldDescriptor) -> ManifoldDescriptor:
    if d1.m != d2.m:
        raise ValueError(f"dimension mismatch ({d1.m} vs {d2.m})")
    return ManifoldDescriptor(d1.m, d1.components + d2.components)


def basis_class(i: int) -> ManifoldDescriptor:
    """RP(i) with its Hopf bundle."""
    return ManifoldDescriptor(i, (Component((ProjectiveFactor(i, True),)),))


def product(
    c1: Component,
    c2: Component,
    twist_from: Literal["left", "right", "both"] = "both",
) -> Component:
    """Cartesian product; only the side(s) named in ``twist_from`` keep their twists."""
    if twist_from not in ("left", "right", "both"):
        raise ValueError(f"twist_from must be left, right or both, got {twist_from!r}")

    def strip(c):
        return tuple(ProjectiveFactor(f.dim, False) for f in c.factors)

    left = c1.factors if twist_from in ("left", "both") else strip(c1)
    right = c2.factors if twist_from in ("right", "both") else strip(c2)
    return Component(left + right)
