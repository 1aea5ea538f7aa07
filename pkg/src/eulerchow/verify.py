"""Acceptance checks: exact reproduction of the catalog tables plus
randomized algebra-law suites, shared by the CLI and the test suite."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import catalog, oracle, schubert
from .monoid import GradedMonoid, MonoidMorphism, compose
from .series import (FormalSeries, IntPolynomial, convolve, equals_up_to,
                     evaluate_polynomial_coefficients, exterior,
                     first_difference, one, pullback, pushforward)

SEED = 20240811
ALGEBRA_CASES = 100


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f": {self.detail}"
                                           if self.detail else "")


def _ok(name, detail=""):
    return CheckResult(name, True, detail)


def _fail(name, detail):
    return CheckResult(name, False, detail)


def _diff_detail(diff):
    m, a, b = diff
    return f"first difference at t^{m}: {a} vs {b}"


# ---------------------------------------------------------------------------
# Random case generation (fixed seed; sizes bounded for the naive oracles)

def random_monoid(rng: random.Random, max_rank=3) -> GradedMonoid:
    rank = rng.randint(1, max_rank)
    weights = [rng.choice([1, 1, 1, 2]) for _ in range(rank)]
    labels = [f"g{i}" for i in range(rank)]
    return GradedMonoid.free(labels, weights)


def random_bound(rng: random.Random, monoid: GradedMonoid) -> int:
    return rng.randint(2, 5 if monoid.rank == 3 else 8)


def random_series(rng: random.Random, monoid: GradedMonoid, bound: int,
                  poly=False) -> FormalSeries:
    coeffs = {}
    for m in monoid.enumerate_up_to(bound):
        if rng.random() < 0.4:
            if poly:
                c = IntPolynomial(tuple(rng.randint(-3, 3)
                                        for _ in range(rng.randint(1, 3))))
            else:
                c = rng.randint(-5, 5)
            if c:
                coeffs[m] = c
    return FormalSeries(monoid, bound, coeffs)


def random_morphism(rng: random.Random, source: GradedMonoid,
                    target: GradedMonoid) -> MonoidMorphism:
    """Random morphism whose generator images are nonzero (finite fibers)."""
    images = []
    for _ in range(source.rank):
        while True:
            img = tuple(rng.randint(0, 2) for _ in range(target.rank))
            if any(img):
                images.append(img)
                break
    return MonoidMorphism(source, target, tuple(images))


# ---------------------------------------------------------------------------
# Criterion 1: flag divisor series

def check_flag() -> list[CheckResult]:
    out = []
    grid = 20
    closed = catalog.euler_chow(catalog.parse_descriptor("Flag012"), 2,
                                method="closed").closed_form
    expansion = closed.expand(2 * grid)
    table = catalog.flag012_divisor_by_recurrence(grid, grid)
    bad = []
    for r in range(grid + 1):
        for s in range(grid + 1):
            want = oracle.weyl_dim_gl3(r, s)
            got = expansion.coefficient((r, s))
            rec = table[r][s]
            if got != want or rec != want:
                bad.append((r, s, got, rec, want))
    if bad:
        r, s, got, rec, want = bad[0]
        out.append(_fail("flag divisor 21x21 table",
                         f"(r,s)=({r},{s}): expansion {got}, "
                         f"recurrence {rec}, Weyl {want}"))
    else:
        out.append(_ok("flag divisor 21x21 table",
                       "expansion == recurrence == Weyl formula"))
    return out


# ---------------------------------------------------------------------------
# Criterion 2: split-bundle pipeline vs closed form

BUNDLE_CASES = [(1, 0, 1), (1, 1, 1), (1, 2, 1), (1, 3, 1),
                (2, 1, 1), (2, 1, 2), (2, 3, 2), (3, 2, 2)]


def check_bundle(degree=10) -> list[CheckResult]:
    out = []
    for n, d, p in BUNDLE_CASES:
        closed = catalog.split_bundle_closed(n, d, p).expand(degree)
        pipeline = catalog.split_bundle_series(n, d, p, degree)
        diff = first_difference(closed, pipeline, degree)
        name = f"split bundle (n={n},d={d},p={p}) to degree {degree}"
        out.append(_ok(name) if diff is None
                   else _fail(name, _diff_detail(diff)))
    return out


# ---------------------------------------------------------------------------
# Criterion 3: Chow-quotient pipeline for G(1,3)

def check_grassmann(degree=12) -> list[CheckResult]:
    out = []
    for p in range(4):
        closed = catalog.grassmannian13_closed(p).expand(degree)
        pipeline = catalog.grassmannian13_series(p, degree)
        diff = first_difference(closed, pipeline, degree)
        name = f"G(1,3) pipeline p={p} to degree {degree}"
        out.append(_ok(name) if diff is None
                   else _fail(name, _diff_detail(diff)))
    e3 = catalog.grassmannian13_series(3, degree)
    head = [e3.coefficient((k,)) for k in range(5)]
    want = [1, 6, 20, 50, 105]
    out.append(_ok("G(1,3) E_3 leading coefficients", str(head))
               if head == want
               else _fail("G(1,3) E_3 leading coefficients",
                          f"{head} != {want}"))
    return out


# ---------------------------------------------------------------------------
# Criterion 4: Macdonald / Lawson-Yau identities

def check_macdonald() -> list[CheckResult]:
    out = []
    bad = []
    for chi in range(1, 13):
        exp = catalog.macdonald(chi).expand(20)
        for d in range(21):
            want = math.comb(d + chi - 1, chi - 1)
            got = exp.coefficient((d,))
            if got != want:
                bad.append((chi, d, got, want))
    out.append(_ok("Macdonald coefficients chi=1..12, d<=20") if not bad
               else _fail("Macdonald coefficients chi=1..12, d<=20",
                          str(bad[0])))
    bad = []
    for n in range(7):
        for p in range(n + 1):
            r = catalog.lawson_yau_pn(n, p)
            want = (((1,), math.comb(n + 1, p + 1)),)
            if r.denominator != want:
                bad.append((n, p, r.denominator))
    out.append(_ok("Lawson-Yau exponents n<=6") if not bad
               else _fail("Lawson-Yau exponents n<=6", str(bad[0])))
    return out


# ---------------------------------------------------------------------------
# Criterion 5: randomized algebra laws

def _law_loop(name, rng, case, cases=ALGEBRA_CASES):
    for i in range(cases):
        detail = case(rng)
        if detail:
            return _fail(name, f"case {i}: {detail}")
    return _ok(name, f"{cases} random cases")


def check_algebra(seed=SEED) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    def ring_laws(rng):
        m = random_monoid(rng)
        bound = random_bound(rng, m)
        f = random_series(rng, m, bound)
        g = random_series(rng, m, bound)
        h = random_series(rng, m, bound)
        if convolve(f, g) != convolve(g, f):
            return "commutativity"
        if convolve(convolve(f, g), h) != convolve(f, convolve(g, h)):
            return "associativity"
        unit = one(m, bound)
        if convolve(unit, f) != f:
            return "unit"
        if convolve(f, g + h) != convolve(f, g) + convolve(f, h):
            return "distributivity"
        return None

    out.append(_law_loop("convolution ring laws", rng, ring_laws))

    def push_hom(rng):
        src = random_monoid(rng)
        dst = random_monoid(rng)
        phi = random_morphism(rng, src, dst)
        bound = random_bound(rng, src)
        f = random_series(rng, src, bound)
        g = random_series(rng, src, bound)
        lhs = pushforward(phi, convolve(f, g))
        rhs = convolve(pushforward(phi, f), pushforward(phi, g))
        degree = min(lhs.bound, rhs.bound)
        if not equals_up_to(lhs, rhs, degree):
            return _diff_detail(first_difference(lhs, rhs, degree))
        return None

    out.append(_law_loop("push-forward is a ring homomorphism", rng,
                         push_hom))

    def pull_linear(rng):
        src = random_monoid(rng)
        dst = random_monoid(rng)
        phi = random_morphism(rng, src, dst)
        bound = random_bound(rng, dst)
        f = random_series(rng, dst, bound)
        g = random_series(rng, dst, bound)
        s = rng.randint(-3, 3)
        lhs = pullback(phi, f + g.scale(s))
        rhs = pullback(phi, f) + pullback(phi, g).scale(s)
        if not equals_up_to(lhs, rhs, min(lhs.bound, rhs.bound)):
            return "linearity"
        return None

    out.append(_law_loop("pull-back linearity", rng, pull_linear))

    def functorial(rng):
        a = random_monoid(rng)
        b = random_monoid(rng)
        c = random_monoid(rng)
        phi = random_morphism(rng, a, b)
        psi = random_morphism(rng, b, c)
        chain = compose(psi, phi)
        if not chain.has_finite_fibers():
            return "composition lost finite fibers"
        bound = random_bound(rng, a)
        f = random_series(rng, a, bound)
        lhs = pushforward(chain, f)
        rhs = pushforward(psi, pushforward(phi, f))
        if not equals_up_to(lhs, rhs, min(lhs.bound, rhs.bound)):
            return "push-forward functoriality"
        g = random_series(rng, c, random_bound(rng, c))
        lhs = pullback(chain, g)
        rhs = pullback(phi, pullback(psi, g))
        if not equals_up_to(lhs, rhs, min(lhs.bound, rhs.bound)):
            return "pull-back functoriality"
        return None

    out.append(_law_loop("functoriality under composition", rng, functorial))

    def ext_assoc(rng):
        ms = [random_monoid(rng, max_rank=2) for _ in range(3)]
        bound = rng.randint(2, 5)
        fs = [random_series(rng, m, bound) for m in ms]
        lhs, _ = exterior(exterior(fs[0], fs[1])[0], fs[2])
        rhs_inner, _ = exterior(fs[1], fs[2])
        rhs, _ = exterior(fs[0], rhs_inner)
        if lhs.coefficients != rhs.coefficients or lhs.bound != rhs.bound:
            return "exterior associativity"
        return None

    out.append(_law_loop("exterior-product associativity", rng, ext_assoc))

    def engine_vs_oracle(rng):
        m = random_monoid(rng)
        bound = random_bound(rng, m)
        f = random_series(rng, m, bound)
        g = random_series(rng, m, bound)
        fast = convolve(f, g)
        slow = oracle.naive_convolve(f, g, bound)
        if fast.coefficients != slow.to_dict():
            return "convolution oracle mismatch"
        dst = random_monoid(rng)
        phi = random_morphism(rng, m, dst)
        pushed = pushforward(phi, f)
        check_bound = min(pushed.bound, 8)
        slow = oracle.naive_pushforward(phi, f, check_bound)
        if pushed.restrict(check_bound).coefficients != slow.to_dict():
            return "push-forward oracle mismatch"
        return None

    out.append(_law_loop("engine matches naive oracle bit-exactly", rng,
                         engine_vs_oracle))
    return out


# ---------------------------------------------------------------------------
# Criterion 6: Hilbert / Euler series compatibility

def check_hilbert(seed=SEED + 1) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    def eval_commutes(rng):
        src = random_monoid(rng)
        dst = random_monoid(rng)
        phi = random_morphism(rng, src, dst)
        bound = random_bound(rng, src)
        a = random_series(rng, src, bound, poly=True)
        lhs = evaluate_polynomial_coefficients(pushforward(phi, a), -1)
        rhs = pushforward(phi, evaluate_polynomial_coefficients(a, -1))
        if lhs != rhs:
            return "evaluation at -1 vs push-forward"
        b = random_series(rng, dst, random_bound(rng, dst), poly=True)
        lhs = evaluate_polynomial_coefficients(pullback(phi, b), -1)
        rhs = pullback(phi, evaluate_polynomial_coefficients(b, -1))
        if lhs != rhs:
            return "evaluation at -1 vs pull-back"
        return None

    out.append(_law_loop("Euler series = Hilbert series at -1", rng,
                         eval_commutes))

    def graded_slices(rng):
        # push-forward of the Hilbert series equals the Hilbert series of
        # the pushed-forward grading, checked slice by slice in u-degree
        src = random_monoid(rng)
        dst = random_monoid(rng)
        phi = random_morphism(rng, src, dst)
        bound = random_bound(rng, src)
        a = random_series(rng, src, bound, poly=True)
        pushed = pushforward(phi, a)
        max_deg = max((len(c.coeffs) for c in a.coefficients.values()),
                      default=0)
        for k in range(max_deg):
            slice_k = FormalSeries(src, bound,
                                   {m: c.coeffs[k]
                                    for m, c in a.coefficients.items()
                                    if k < len(c.coeffs)})
            pushed_slice = pushforward(phi, slice_k)
            got = {m: c.coeffs[k] if k < len(c.coeffs) else 0
                   for m, c in pushed.coefficients.items()}
            got = {m: v for m, v in got.items() if v}
            if got != pushed_slice.coefficients:
                return f"u-degree {k} slice mismatch"
        return None

    out.append(_law_loop("push-forward respects the internal grading", rng,
                         graded_slices))
    return out


# ---------------------------------------------------------------------------
# Criterion 7: Schubert combinatorics

NAMED_DIMENSIONS = [
    # F(0,1;2)
    ((((0,), (0, 1)),), 0), ((((0,), (0, 2)),), 1), ((((1,), (0, 1)),), 1),
    ((((1,), (1, 2)),), 2), ((((2,), (0, 2)),), 2), ((((2,), (1, 2)),), 3),
]
NAMED_G13_DIMENSIONS = [
    ((0, 1), 0), ((0, 2), 1), ((0, 3), 2), ((1, 2), 2), ((1, 3), 3),
    ((2, 3), 4),
]


def check_schubert() -> list[CheckResult]:
    out = []
    sizes = [schubert.basis(catalog.G13, p).rank for p in range(5)]
    out.append(_ok("basis sizes of G(1,3)", str(sizes))
               if sizes == [1, 1, 2, 1, 1]
               else _fail("basis sizes of G(1,3)", str(sizes)))

    bad = []
    for seqs, want in NAMED_DIMENSIONS:
        sym = schubert.SchubertSymbol(catalog.FLAG012, seqs[0])
        if sym.dimension() != want:
            bad.append((sym.label(), sym.dimension(), want))
    for seq, want in NAMED_G13_DIMENSIONS:
        sym = schubert.SchubertSymbol(catalog.G13, (seq,))
        if sym.dimension() != want:
            bad.append((sym.label(), sym.dimension(), want))
    out.append(_ok("named Schubert dimensions") if not bad
               else _fail("named Schubert dimensions", str(bad[0])))

    bad = []
    flag_types = [catalog.FLAG012,
                  schubert.FlagType((0, 1), 3), schubert.FlagType((1, 2), 3)]
    for ft in flag_types:
        for sym in schubert.all_symbols(ft):
            image = schubert.trace_phi(sym)
            if image.dimension() != sym.dimension() + 1:
                bad.append((sym.label(), image.label()))
    out.append(_ok("trace map raises dimension by 1",
                   f"{sum(len(schubert.all_symbols(ft)) for ft in flag_types)}"
                   " symbols")
               if not bad else _fail("trace map raises dimension by 1",
                                     str(bad[0])))
    return out


SUITES = {
    "flag": [check_flag],
    "bundle": [check_bundle],
    "grassmann": [check_grassmann, check_schubert],
    "algebra": [check_algebra, check_macdonald],
    "hilbert": [check_hilbert],
}
SUITES["all"] = [fn for name in ("algebra", "bundle", "grassmann", "flag",
                                 "hilbert") for fn in SUITES[name]]


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; "
                       f"choose from {sorted(SUITES)}")
    results = []
    for fn in SUITES[name]:
        results.extend(fn())
    return results
