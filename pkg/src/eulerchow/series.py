"""Truncated formal series over graded monoids, and exact rational forms.

A FormalSeries stores a sparse coefficient table valid up to an explicit
grade bound; every operation computes the exact bound of its output and
errors rather than returning silently invalid coefficients.  Coefficients
are arbitrary-precision integers or integer polynomials in one formal
variable (used for Hilbert-style series); the two kinds never mix.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .monoid import Element, GradedMonoid, MonoidMismatchError, MonoidMorphism
from .monoid import product as monoid_product


class TruncationError(ValueError):
    """Requested degree exceeds the validity bound of a series."""


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with integer coefficients, constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", tuple(c))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))


POLY_ONE = IntPolynomial((1,))
POLY_ZERO = IntPolynomial(())


def _is_poly(c) -> bool:
    return isinstance(c, IntPolynomial)


def _check_kinds(f: "FormalSeries", g: "FormalSeries"):
    kf, kg = f.kind, g.kind
    if kf is not None and kg is not None and kf != kg:
        raise TypeError("cannot mix integer and polynomial coefficients")


@dataclass(frozen=True)
class FormalSeries:
    """Element of the convolution ring, truncated at a grade bound."""

    monoid: GradedMonoid
    bound: int
    coefficients: dict[Element, object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, c in self.coefficients.items():
            m = self.monoid.validate(m)
            if self.monoid.grade(m) > self.bound:
                raise TruncationError(
                    f"coefficient at {m} exceeds bound {self.bound}")
            if c:
                clean[m] = c
        object.__setattr__(self, "coefficients", clean)

    @property
    def kind(self) -> str | None:
        """'int', 'poly', or None for the zero series."""
        for c in self.coefficients.values():
            return "poly" if _is_poly(c) else "int"
        return None

    def coefficient(self, m: Element):
        self.monoid.validate(m)
        if self.monoid.grade(m) > self.bound:
            raise TruncationError(
                f"coefficient at {m} is beyond bound {self.bound}")
        return self.coefficients.get(tuple(m), 0)

    def items_by_grade(self):
        return sorted(self.coefficients.items(),
                      key=lambda kv: self.monoid.key(kv[0]))

    def restrict(self, bound: int) -> "FormalSeries":
        if bound > self.bound:
            raise TruncationError(
                f"cannot extend bound {self.bound} to {bound}")
        grade = self.monoid.grade
        return FormalSeries(self.monoid, bound,
                            {m: c for m, c in self.coefficients.items()
                             if grade(m) <= bound})

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        if self.monoid != other.monoid:
            raise MonoidMismatchError("series over different monoids")
        _check_kinds(self, other)
        bound = min(self.bound, other.bound)
        grade = self.monoid.grade
        acc = {m: c for m, c in self.coefficients.items()
               if grade(m) <= bound}
        for m, c in other.coefficients.items():
            if grade(m) <= bound:
                acc[m] = acc[m] + c if m in acc else c
        return FormalSeries(self.monoid, bound, acc)

    def scale(self, s) -> "FormalSeries":
        if _is_poly(s) != (self.kind == "poly") and self.kind is not None:
            raise TypeError("scalar kind must match coefficient kind")
        return FormalSeries(self.monoid, self.bound,
                            {m: c * s for m, c in self.coefficients.items()})

    def __neg__(self):
        return self.scale(POLY_ZERO - POLY_ONE if self.kind == "poly" else -1)

    def __sub__(self, other):
        return self + (-other)


def delta(monoid: GradedMonoid, m: Element, c) -> FormalSeries:
    """Monomial series c * t^m, valid to the grade of m by default."""
    m = monoid.validate(m)
    return FormalSeries(monoid, monoid.grade(m), {m: c})


def one(monoid: GradedMonoid, bound: int, poly: bool = False) -> FormalSeries:
    return FormalSeries(monoid, bound,
                        {monoid.zero(): POLY_ONE if poly else 1})


def zero(monoid: GradedMonoid, bound: int) -> FormalSeries:
    return FormalSeries(monoid, bound, {})


def convolve(f: FormalSeries, g: FormalSeries) -> FormalSeries:
    """Convolution product: coefficient at m sums f(a)g(b) over a+b=m."""
    if f.monoid != g.monoid:
        raise MonoidMismatchError("series over different monoids")
    _check_kinds(f, g)
    monoid = f.monoid
    bound = min(f.bound, g.bound)
    grade = monoid.grade
    g_items = sorted(((grade(m), m, c) for m, c in g.coefficients.items()))
    acc = {}
    for a, ca in f.coefficients.items():
        budget = bound - grade(a)
        if budget < 0:
            continue
        for gb, b, cb in g_items:
            if gb > budget:
                break
            m = tuple(x + y for x, y in zip(a, b))
            v = ca * cb
            acc[m] = acc[m] + v if m in acc else v
    return FormalSeries(monoid, bound, acc)


def exterior(f: FormalSeries, g: FormalSeries):
    """Exterior product over the product monoid: (f (.) g)(m,n) = f(m)g(n).

    Returns (series, product_monoid).
    """
    _check_kinds(f, g)
    prod, _, _ = monoid_product(f.monoid, g.monoid)
    bound = min(f.bound, g.bound)
    gm, gn = f.monoid.grade, g.monoid.grade
    acc = {}
    for m, cm in f.coefficients.items():
        for n, cn in g.coefficients.items():
            if gm(m) + gn(n) <= bound:
                acc[m + n] = cm * cn
    return FormalSeries(prod, bound, acc), prod


def pushforward_bound(phi: MonoidMorphism, source_bound: int) -> int:
    ratio = phi.min_expansion_ratio()
    if ratio is None:
        return source_bound
    return int(math.floor(source_bound * ratio))


def pushforward(phi: MonoidMorphism, f: FormalSeries) -> FormalSeries:
    """Sum coefficients over fibers of phi; requires finite fibers."""
    if phi.source != f.monoid:
        raise MonoidMismatchError("series not over the source of the morphism")
    if not phi.has_finite_fibers():
        raise ValueError("push-forward requires finite fibers "
                         "(a generator maps to zero)")
    out_bound = pushforward_bound(phi, f.bound)
    grade = phi.target.grade
    acc = {}
    for m, c in f.coefficients.items():
        n = phi.apply(m)
        if grade(n) <= out_bound:
            acc[n] = acc[n] + c if n in acc else c
    return FormalSeries(phi.target, out_bound, acc)


def pullback_bound(phi: MonoidMorphism, target_bound: int) -> int:
    ratios = [Fraction(w, g)
              for g, w in zip(phi.image_grades(), phi.source.weights) if g > 0]
    if not ratios:
        return target_bound
    return int(math.floor(target_bound * min(ratios)))


def pullback(phi: MonoidMorphism, g: FormalSeries) -> FormalSeries:
    """Precompose: (pullback g)(m) = g(phi(m))."""
    if phi.target != g.monoid:
        raise MonoidMismatchError("series not over the target of the morphism")
    bound = pullback_bound(phi, g.bound)
    acc = {}
    for m in phi.source.enumerate_up_to(bound):
        c = g.coefficient(phi.apply(m))
        if c:
            acc[m] = c
    return FormalSeries(phi.source, bound, acc)


def equals_up_to(f: FormalSeries, g: FormalSeries, degree: int) -> bool:
    """Exact coefficient agreement on every element of grade <= degree."""
    if f.monoid != g.monoid:
        raise MonoidMismatchError("series over different monoids")
    if degree > f.bound or degree > g.bound:
        raise TruncationError(
            f"degree {degree} exceeds a series bound "
            f"({f.bound}, {g.bound})")
    return first_difference(f, g, degree) is None


def first_difference(f: FormalSeries, g: FormalSeries, degree: int):
    """First graded-lex element where coefficients differ, or None."""
    grade = f.monoid.grade
    keys = {m for m in f.coefficients if grade(m) <= degree}
    keys |= {m for m in g.coefficients if grade(m) <= degree}
    for m in sorted(keys, key=f.monoid.key):
        a = f.coefficients.get(m, 0)
        b = g.coefficients.get(m, 0)
        if (a or b) and a != b:
            return m, a, b
    return None


def evaluate_polynomial_coefficients(f: FormalSeries, x: int) -> FormalSeries:
    """Apply the evaluation homomorphism at x to every coefficient."""
    if f.kind == "int":
        raise TypeError("series does not have polynomial coefficients")
    return FormalSeries(f.monoid, f.bound,
                        {m: c.evaluate(x) for m, c in f.coefficients.items()})


@dataclass(frozen=True)
class RationalSeries:
    """Closed form: polynomial numerator over a product of (1 - t^m)^e."""

    monoid: GradedMonoid
    numerator: tuple[tuple[Element, int], ...]
    denominator: tuple[tuple[Element, int], ...]

    def __post_init__(self):
        num = {}
        for m, c in self.numerator:
            m = self.monoid.validate(m)
            if c:
                num[m] = num.get(m, 0) + c
        num = tuple(sorted(((m, c) for m, c in num.items() if c),
                           key=lambda mc: self.monoid.key(mc[0])))
        den = {}
        for m, e in self.denominator:
            m = self.monoid.validate(m)
            if self.monoid.grade(m) == 0:
                raise ValueError("denominator element has grade 0")
            if e < 1:
                raise ValueError("denominator multiplicity must be >= 1")
            den[m] = den.get(m, 0) + e
        den = tuple(sorted(den.items(),
                           key=lambda mc: self.monoid.key(mc[0])))
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def unit(cls, monoid: GradedMonoid) -> "RationalSeries":
        return cls(monoid, ((monoid.zero(), 1),), ())

    def expand(self, degree: int) -> FormalSeries:
        """Truncated geometric expansion, exact to the requested degree."""
        out = FormalSeries(self.monoid, degree,
                           {m: c for m, c in self.numerator
                            if self.monoid.grade(m) <= degree})
        for m, e in self.denominator:
            gm = self.monoid.grade(m)
            factor = {}
            for j in range(degree // gm + 1):
                factor[tuple(j * x for x in m)] = math.comb(j + e - 1, e - 1)
            out = convolve(out, FormalSeries(self.monoid, degree, factor))
        return out

    def multiply(self, other: "RationalSeries") -> "RationalSeries":
        if self.monoid != other.monoid:
            raise MonoidMismatchError("rational series over different monoids")
        num = []
        add = self.monoid.add
        for m1, c1 in self.numerator:
            for m2, c2 in other.numerator:
                num.append((add(m1, m2), c1 * c2))
        return RationalSeries(self.monoid, tuple(num),
                              self.denominator + other.denominator)

    def to_json(self) -> dict:
        return {
            "monoid": self.monoid.to_json(),
            "numerator": [{"exponents": list(m), "value": str(c)}
                          for m, c in self.numerator],
            "denominator": [{"exponents": list(m), "multiplicity": e}
                            for m, e in self.denominator],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalSeries":
        monoid = GradedMonoid.from_json(data["monoid"])
        num = tuple((tuple(t["exponents"]), int(t["value"]))
                    for t in data["numerator"])
        den = tuple((tuple(t["exponents"]), int(t["multiplicity"]))
                    for t in data["denominator"])
        return cls(monoid, num, den)


def rational_multiply(r1: RationalSeries, r2: RationalSeries) -> RationalSeries:
    return r1.multiply(r2)


def _coeff_to_json(c):
    if _is_poly(c):
        return {"poly": [str(x) for x in c.coeffs]}
    return str(c)


def _coeff_from_json(v):
    if isinstance(v, dict):
        return IntPolynomial(tuple(int(x) for x in v["poly"]))
    return int(v)


def series_to_json(f: FormalSeries) -> dict:
    return {
        "monoid": f.monoid.to_json(),
        "bound": f.bound,
        "coefficients": [{"exponents": list(m), "value": _coeff_to_json(c)}
                         for m, c in f.items_by_grade()],
    }


def series_from_json(data: dict) -> FormalSeries:
    monoid = GradedMonoid.from_json(data["monoid"])
    coeffs = {tuple(t["exponents"]): _coeff_from_json(t["value"])
              for t in data["coefficients"]}
    return FormalSeries(monoid, int(data["bound"]), coeffs)


def dumps(obj) -> str:
    """Byte-stable JSON text for a series or rational series."""
    if isinstance(obj, FormalSeries):
        payload = series_to_json(obj)
    elif isinstance(obj, RationalSeries):
        payload = obj.to_json()
    else:
        raise TypeError(type(obj).__name__)
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


def loads(text: str):
    data = json.loads(text)
    if "coefficients" in data:
        return series_from_json(data)
    return RationalSeries.from_json(data)
