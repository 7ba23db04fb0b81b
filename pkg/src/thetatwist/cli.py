"""Command-line front door: qexp, twist-search, verify-poly, screen, tables.

Exit codes are a stable contract: 0 success, 2 usage or unsupported input,
3 search found nothing, 4 I/O problems, 5 verification failure.  All output
is deterministic; --format json emits machine-readable documents that
round-trip through the corresponding from_json_dict constructors.
"""

import argparse
import json
import sys

from .errors import NotFound, ThetaTwistError, UnsupportedWeight
from .galrep import screen_exceptional
from .polyverify import BUNDLED_LABELS, bundled_record, load_poly_file, verify_record
from .qseries import delta_k
from .twist import published_discrepancy, twist_search

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_FOUND = 3
EXIT_IO = 4
EXIT_VERIFY_FAIL = 5


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="thetatwist",
        description=(
            "mod-ell q-expansions of the level-1 eigenforms, theta-twist "
            "search, and Frobenius-pattern verification of projective "
            "polynomials"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, weight=False, ell=False):
        if weight:
            p.add_argument("--weight", type=int, required=True, help="form weight k")
        if ell:
            p.add_argument("--ell", type=int, required=True, help="prime modulus")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p = sub.add_parser("qexp", help="print coefficients of delta_k mod ell")
    add_common(p, weight=True, ell=True)
    p.add_argument("--terms", type=_positive_int, default=100, help="last coefficient index")

    p = sub.add_parser("twist-search", help="find (i, k') with delta_k = theta^i delta_k'")
    add_common(p, weight=True, ell=True)
    p.add_argument(
        "--extended",
        type=_positive_int,
        default=1000,
        help="terms of full series equality to confirm beyond the prime bound",
    )

    p = sub.add_parser("verify-poly", help="check a polynomial against Frobenius patterns")
    add_common(p, weight=True, ell=True)
    p.add_argument("--poly-file", help="polynomial expression file (default: bundled)")
    p.add_argument("--pmax", type=_positive_int, default=1000, help="largest prime to test")
    p.add_argument("--full", action="store_true", help="include per-prime outcomes")
    p.add_argument("--data-dir", help="override the bundled data directory")

    p = sub.add_parser("screen", help="heuristic exceptional-prime screening")
    add_common(p, weight=True, ell=True)
    p.add_argument("--pbound", type=_positive_int, default=200, help="prime scan bound")

    p = sub.add_parser("tables", help="reproduce the screening/twist/polynomial tables")
    add_common(p)
    p.add_argument("--pmax", type=_positive_int, default=1000, help="verify-poly prime bound")
    p.add_argument("--pbound", type=_positive_int, default=200, help="screening prime bound")
    p.add_argument("--extended", type=_positive_int, default=1000, help="twist equality terms")
    p.add_argument("--full", action="store_true", help="include per-prime outcomes")
    p.add_argument("--data-dir", help="override the bundled data directory")

    return parser


def _emit_json(doc):
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_qexp(args):
    series = delta_k(args.weight, args.ell, args.terms)
    if args.format == "json":
        _emit_json(series.to_json_dict())
    else:
        print(", ".join(str(series.coeff(n)) for n in range(1, args.terms + 1)))
    return EXIT_OK


def _twist_result_doc(k, ell, i, kp, cert, note):
    return {
        "k": k,
        "ell": ell,
        "i": i,
        "k_prime": kp,
        "certificate": cert.to_json_dict(),
        "warning": note,
    }


def cmd_twist_search(args):
    k, ell = args.weight, args.ell
    i, kp, cert = twist_search(k, ell, args.extended)
    note = published_discrepancy(k, ell, i, kp)
    if args.format == "json":
        _emit_json(_twist_result_doc(k, ell, i, kp, cert, note))
    else:
        print(f"delta_{k} = theta^{i} delta_{kp} (mod {ell})")
        print(
            f"checked primes p <= {cert.bound} (p != {ell}) and "
            f"full series equality to {cert.extended_terms} terms"
        )
        if note:
            print(f"warning: {note}")
    return EXIT_OK


def _verify_one(args, k, ell):
    if getattr(args, "poly_file", None):
        record = load_poly_file(args.poly_file, k=k, ell=ell)
        record.validate_label()
    else:
        record = bundled_record(k, ell, args.data_dir)
    return verify_record(record, k, ell, args.pmax)


def _render_verify_text(report):
    c = report.counts
    verdict = "consistent" if report.ok else "INCONSISTENT"
    print(
        f"({report.k}, {report.ell}) pmax={report.pmax}: {verdict} -- "
        f"{c['match']} match, {c['ambiguous_pass']} ambiguous-pass, "
        f"{c['skipped_ramified']} ramified skips, {c['skipped_ell']} ell skip, "
        f"{c['fail']} FAIL"
    )
    if report.failures:
        print(f"  failing primes: {', '.join(str(p) for p in report.failures)}")


def cmd_verify_poly(args):
    report = _verify_one(args, args.weight, args.ell)
    if args.format == "json":
        _emit_json(report.to_json_dict(full=args.full))
    else:
        _render_verify_text(report)
        if args.full:
            for p, status, obs, pred in report.outcomes:
                print(f"  p={p}: {status} observed={obs} predicted={pred}")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAIL


def _render_screen_text(rep):
    print(
        f"({rep.k}, {rep.ell}) primes to {rep.bound}: {rep.verdict} "
        f"[reducible={rep.reducible_candidate} (j={rep.reducible_j}), "
        f"dihedral={rep.dihedral_candidate}, "
        f"small-image={rep.small_image_candidate}]"
    )


def cmd_screen(args):
    rep = screen_exceptional(args.weight, args.ell, args.pbound)
    if args.format == "json":
        _emit_json(rep.to_json_dict())
    else:
        _render_screen_text(rep)
        print("  (heuristic congruence screen; bounded scan, not a proof)")
    return EXIT_OK


def cmd_tables(args):
    ok = True
    screens = []
    twists = []
    verifies = []
    for k, ell in BUNDLED_LABELS:
        screens.append(screen_exceptional(k, ell, args.pbound))
        i, kp, cert = twist_search(k, ell, args.extended)
        twists.append((k, ell, i, kp, cert, published_discrepancy(k, ell, i, kp)))
        record = bundled_record(k, ell, args.data_dir)
        verifies.append(verify_record(record, k, ell, args.pmax))
    for rep in screens:
        ok = ok and rep.verdict == "likely unexceptional"
    for rep in verifies:
        ok = ok and rep.ok

    if args.format == "json":
        _emit_json(
            {
                "screening": [rep.to_json_dict() for rep in screens],
                "twists": [
                    _twist_result_doc(k, ell, i, kp, cert, note)
                    for k, ell, i, kp, cert, note in twists
                ],
                "verification": [rep.to_json_dict(full=args.full) for rep in verifies],
                "all_passed": ok,
            }
        )
    else:
        print(f"== exceptional-prime screening (primes to {args.pbound}) ==")
        for rep in screens:
            _render_screen_text(rep)
        print("== theta-twist relations ==")
        for k, ell, i, kp, cert, note in twists:
            line = f"({k}, {ell}): delta_{k} = theta^{i} delta_{kp} (mod {ell})"
            print(line)
            if note:
                print(f"  warning: {note}")
        print(f"== polynomial verification (pmax={args.pmax}) ==")
        for rep in verifies:
            _render_verify_text(rep)
        print("all checks passed" if ok else "SOME CHECKS FAILED")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


_HANDLERS = {
    "qexp": cmd_qexp,
    "twist-search": cmd_twist_search,
    "verify-poly": cmd_verify_poly,
    "screen": cmd_screen,
    "tables": cmd_tables,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except UnsupportedWeight as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except (OSError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ThetaTwistError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
