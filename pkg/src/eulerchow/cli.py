"""Command-line front end: series computation, verification suites,
series-file comparison, and rational-form expansion.

Exit codes: 0 success, 1 verification failure, 2 usage/format error,
3 unsupported request.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, verify
from .series import (FormalSeries, RationalSeries, TruncationError, dumps,
                     first_difference, loads)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _supports_unicode(stream) -> bool:
    encoding = getattr(stream, "encoding", None) or "ascii"
    try:
        "⟨⟩".encode(encoding)
        return True
    except (UnicodeEncodeError, LookupError):
        return False


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return
    if not _supports_unicode(sys.stdout):
        text = text.replace("⟨", "<").replace("⟩", ">")
    sys.stdout.write(text)


def _monomial(variables, exponents) -> str:
    parts = []
    for var, e in zip(variables, exponents):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts) if parts else "1"


def _format_rational(r: RationalSeries, variables) -> str:
    terms = []
    for m, c in r.numerator:
        mono = _monomial(variables, m)
        if mono == "1":
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{c}*{mono}")
    num = " + ".join(terms).replace("+ -", "- ") if terms else "0"
    if not r.denominator:
        return num
    den = "".join(f"(1-{_monomial(variables, m)})" + (f"^{e}" if e > 1 else "")
                  for m, e in r.denominator)
    if len(terms) > 1:
        num = f"({num})"
    return f"{num}/{den}"


def _series_text(result: catalog.EulerChowResult, degree: int) -> str:
    lines = [f"# E_{result.p}({result.variety}), degree <= {degree}"]
    if result.generator_dictionary:
        pairs = ", ".join(f"{var} = {cls}"
                          for var, cls in result.generator_dictionary)
        lines.append(f"# generators: {pairs}")
    expansion = result.expansion
    if expansion is None:
        expansion = result.closed_form.expand(degree)
    variables = [var for var, _ in result.generator_dictionary]
    if not variables:
        variables = list(expansion.monoid.labels)
    for m, c in expansion.items_by_grade():
        lines.append(f"{_monomial(variables, m)}: {c}")
    return "\n".join(lines) + "\n"


def cmd_series(args) -> int:
    try:
        variety = catalog.parse_descriptor(args.variety)
    except catalog.UnsupportedRequestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = catalog.euler_chow(variety, args.p, args.degree,
                                    method="both")
    except catalog.VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except catalog.UnsupportedRequestError:
        # no independent pipeline; fall back to the stored closed form
        try:
            result = catalog.euler_chow(variety, args.p, args.degree,
                                        method="closed")
        except (ValueError, catalog.UnsupportedRequestError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "text":
        _emit(_series_text(result, args.degree), args.output)
    elif args.format == "json":
        expansion = result.expansion
        if expansion is None:
            expansion = result.closed_form.expand(args.degree)
        _emit(dumps(expansion), args.output)
    else:  # rational
        if result.closed_form is None:
            print(f"error: no closed form available for {variety}",
                  file=sys.stderr)
            return EXIT_UNSUPPORTED
        variables = [var for var, _ in result.generator_dictionary]
        if not variables:
            variables = list(result.closed_form.monoid.labels)
        header = (f"# E_{result.p}({result.variety})\n"
                  f"{_format_rational(result.closed_form, variables)}\n")
        _emit(header, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        results = verify.run_suite(args.suite)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    report = "".join(r.line() + "\n" for r in results)
    _emit(report, args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def _load_expanded(path: str, degree: int) -> FormalSeries:
    with open(path, encoding="utf-8") as fh:
        obj = loads(fh.read())
    if isinstance(obj, RationalSeries):
        return obj.expand(degree)
    return obj


def cmd_compare(args) -> int:
    try:
        a = _load_expanded(args.file_a, args.degree)
        b = _load_expanded(args.file_b, args.degree)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if a.monoid != b.monoid:
        print("error: series are over different monoids "
              f"({a.monoid.labels} vs {b.monoid.labels})", file=sys.stderr)
        return EXIT_USAGE
    if args.degree > a.bound or args.degree > b.bound:
        print(f"error: degree {args.degree} exceeds a series bound "
              f"({a.bound}, {b.bound})", file=sys.stderr)
        return EXIT_UNSUPPORTED
    diff = first_difference(a, b, args.degree)
    if diff is None:
        print(f"equal to degree {args.degree}")
        return EXIT_OK
    m, va, vb = diff
    print(f"first difference at t^{m}: {va} vs {vb}")
    return EXIT_VERIFY


def cmd_expand(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            obj = loads(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not isinstance(obj, RationalSeries):
        print("error: expand requires a rational-series file",
              file=sys.stderr)
        return EXIT_USAGE
    _emit(dumps(obj.expand(args.degree)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerchow",
        description="Euler-Chow series of catalog varieties")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="compute a catalog series")
    p.add_argument("variety", help='descriptor, e.g. "Pn(2)" or "G(1,3)"')
    p.add_argument("--p", type=int, default=0,
                   help="cycle dimension (default 0)")
    p.add_argument("--degree", type=int, default=10)
    p.add_argument("--format", choices=["text", "json", "rational"],
                   default="text")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=sorted(verify.SUITES))
    p.add_argument("--output")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("compare", help="compare two series files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--degree", type=int, default=10)
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("expand", help="expand a rational-series file")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=10)
    p.add_argument("--output")
    p.set_defaults(fn=cmd_expand)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
