"""Finitely generated free graded abelian monoids and their morphisms.

Elements are plain tuples of nonnegative integer exponents; the monoid
object supplies grading, validation and enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Element = tuple[int, ...]


class MonoidMismatchError(ValueError):
    """Raised when an operation mixes incompatible monoids."""


@dataclass(frozen=True)
class GradedMonoid:
    """Free abelian monoid Z_+^k with labeled, positively weighted generators."""

    generators: tuple[tuple[str, int], ...]

    def __post_init__(self):
        labels = [lab for lab, _ in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be pairwise distinct")
        for lab, w in self.generators:
            if w < 1:
                raise ValueError(f"generator {lab!r} has weight {w} < 1")

    @classmethod
    def free(cls, labels, weights=None) -> "GradedMonoid":
        labels = list(labels)
        if weights is None:
            weights = [1] * len(labels)
        return cls(tuple(zip(labels, weights)))

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.generators)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.generators)

    def zero(self) -> Element:
        return (0,) * self.rank

    def generator(self, i: int) -> Element:
        e = [0] * self.rank
        e[i] = 1
        return tuple(e)

    def index_of(self, label: str) -> int:
        for i, (lab, _) in enumerate(self.generators):
            if lab == label:
                return i
        raise KeyError(label)

    def validate(self, m: Element) -> Element:
        if len(m) != self.rank:
            raise MonoidMismatchError(
                f"element of length {len(m)} in monoid of rank {self.rank}")
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {m}")
        return tuple(m)

    def grade(self, m: Element) -> int:
        """Weighted total degree of an exponent vector."""
        self.validate(m)
        return sum(e * w for e, w in zip(m, self.weights))

    def add(self, a: Element, b: Element) -> Element:
        self.validate(a)
        self.validate(b)
        return tuple(x + y for x, y in zip(a, b))

    def key(self, m: Element):
        """Graded-lexicographic sort key."""
        return (self.grade(m), m)

    def enumerate_up_to(self, bound: int) -> list[Element]:
        """All elements of grade <= bound, in graded-lex order."""
        if bound < 0:
            raise ValueError("bound must be >= 0")
        out = []
        weights = self.weights

        def rec(i, prefix, budget):
            if i == len(weights):
                out.append(tuple(prefix))
                return
            w = weights[i]
            for e in range(budget // w + 1):
                rec(i + 1, prefix + [e], budget - e * w)

        rec(0, [], bound)
        out.sort(key=self.key)
        return out

    def to_json(self) -> dict:
        return {"generators": [{"label": lab, "weight": w}
                               for lab, w in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "GradedMonoid":
        return cls(tuple((g["label"], int(g["weight"]))
                         for g in data["generators"]))


@dataclass(frozen=True)
class MonoidMorphism:
    """Morphism between free graded monoids, fixed by its generator images."""

    source: GradedMonoid
    target: GradedMonoid
    generator_images: tuple[Element, ...]

    def __post_init__(self):
        if len(self.generator_images) != self.source.rank:
            raise MonoidMismatchError(
                "one generator image per source generator required")
        for img in self.generator_images:
            self.target.validate(img)

    @classmethod
    def identity(cls, m: GradedMonoid) -> "MonoidMorphism":
        return cls(m, m, tuple(m.generator(i) for i in range(m.rank)))

    def apply(self, m: Element) -> Element:
        self.source.validate(m)
        out = list(self.target.zero())
        for e, img in zip(m, self.generator_images):
            if e:
                for j, v in enumerate(img):
                    out[j] += e * v
        return tuple(out)

    def has_finite_fibers(self) -> bool:
        """True iff no generator maps to the zero element."""
        return all(any(img) for img in self.generator_images)

    def image_grades(self) -> tuple[int, ...]:
        return tuple(self.target.grade(img) for img in self.generator_images)

    def min_expansion_ratio(self) -> Fraction | None:
        """min_i grade(image_i)/weight_i, or None for the rank-0 source.

        Target grade of apply(m) is at least this ratio times grade(m).
        """
        if self.source.rank == 0:
            return None
        return min(Fraction(g, w)
                   for g, w in zip(self.image_grades(), self.source.weights))


def compose(outer: MonoidMorphism, inner: MonoidMorphism) -> MonoidMorphism:
    """outer after inner; apply(compose(outer, inner), m) = outer(inner(m))."""
    if inner.target != outer.source:
        raise MonoidMismatchError("morphisms are not composable")
    return MonoidMorphism(
        inner.source, outer.target,
        tuple(outer.apply(img) for img in inner.generator_images))


def product(m: GradedMonoid, n: GradedMonoid):
    """Product monoid M x N with injections and projections.

    Returns (monoid, (inj_m, inj_n), (proj_m, proj_n)).  Colliding labels
    are namespaced by factor index.
    """
    labels = m.labels + n.labels
    if len(set(labels)) != len(labels):
        labels = tuple(f"0.{lab}" for lab in m.labels) + \
            tuple(f"1.{lab}" for lab in n.labels)
    prod = GradedMonoid(tuple(zip(labels, m.weights + n.weights)))

    zero_n = n.zero()
    zero_m = m.zero()
    inj_m = MonoidMorphism(m, prod, tuple(m.generator(i) + zero_n
                                          for i in range(m.rank)))
    inj_n = MonoidMorphism(n, prod, tuple(zero_m + n.generator(i)
                                          for i in range(n.rank)))
    proj_m = MonoidMorphism(prod, m,
                            tuple(m.generator(i) for i in range(m.rank)) +
                            tuple(itertools.repeat(zero_m, n.rank)))
    proj_n = MonoidMorphism(prod, n,
                            tuple(itertools.repeat(zero_n, m.rank)) +
                            tuple(n.generator(i) for i in range(n.rank)))
    return prod, (inj_m, inj_n), (proj_m, proj_n)


TRIVIAL = GradedMonoid(())
