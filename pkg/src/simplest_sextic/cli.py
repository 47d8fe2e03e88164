"""Command line front end.

Exit codes: 0 success, 1 checked and false, 2 invalid input,
3 internal inconsistency.
"""

import argparse
import json
import sys

from . import monogenity as mono
from .arith.resultant import discriminant
from .basis import (
    TRIAL_DIVISION_BOUND,
    UndecidedError,
    basis_discriminant,
    certify_integral_basis,
    instantiate_basis,
)
from .field import DomainError, InconsistencyError, SexticField

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2, 3


def _coords(text):
    try:
        y = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}")
    if len(y) != 5:
        raise argparse.ArgumentTypeError(f"need five coordinates y2..y6, got {len(y)}")
    return y


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _emit(args, payload, human):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def cmd_certify(args):
    rep = certify_integral_basis(args.m, args.trial_bound)
    d = rep.to_dict()
    if args.json:
        print(json.dumps(d, sort_keys=True))
    else:
        status = "certified" if rep.certified else "NOT certified"
        print(f"m={rep.m} q={rep.q} r={rep.r}: {status}")
        if rep.disc_computed is not None:
            print(f"disc {rep.disc_computed} (claimed {rep.disc_claimed})")
        for e in rep.maximality_evidence:
            prime = "others" if e.prime is None else e.prime
            print(f"  p={prime:<8} {e.method:<22} {'ok' if e.verdict else 'FAIL'}")
    if not rep.certified:
        print(f"m={rep.m}: {rep.reason}", file=sys.stderr)
        return EXIT_FALSE
    return EXIT_OK


def cmd_index(args):
    for y in args.y:
        ind = mono.index_of(args.m, y)
        _emit(args, {"m": args.m, "y": list(y), "index": ind}, str(ind))
    return EXIT_OK


def cmd_factors(args):
    for y in args.y:
        fac = mono.index_form_factors(args.m, y)
        d = fac.to_dict()
        d.update(m=args.m, y=list(y))
        _emit(args, d, f"G1={fac.G1} G2={fac.G2} |G3|={fac.absG3} index={fac.index}")
    return EXIT_OK


def cmd_verify_table(args):
    rep = mono.verify_generator_table(args.m)
    payload = {
        "m": rep.m,
        "checked": rep.checked,
        "failures": [{"y": list(y), "index": ind} for y, ind in rep.failures],
        "ok": rep.ok,
    }
    human = f"m={rep.m}: {rep.checked - len(rep.failures)}/{rep.checked} vectors have index 1"
    for y, ind in rep.failures:
        human += f"\n  FAIL {list(y)} index {ind}"
    _emit(args, payload, human)
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_search(args):
    gens = mono.search_generators(args.m, args.bound, work_limit=args.work_limit)
    human = f"{len(gens)} generators with max|y| <= {args.bound}"
    for g in gens:
        human += "\n  " + " ".join(str(v) for v in g)
    _emit(args, {"m": args.m, "bound": args.bound, "generators": [list(g) for g in gens]}, human)
    return EXIT_OK


def cmd_scan(args):
    out = open(args.out, "w") if args.out else None
    possible, nonmono, skipped, uncertified = [], 0, 0, []
    try:
        for rec in mono.scan_range(args.m_from, args.m_to, samples=args.samples, workers=args.workers):
            if out:
                out.write(rec.to_json() + "\n")
            if rec.skipped_reason:
                skipped += 1
            elif not rec.certified:
                uncertified.append(rec.m)
            elif rec.verdict == mono.Verdict.NON_MONOGENIC.value:
                nonmono += 1
            else:
                possible.append(rec.m)
    finally:
        if out:
            out.close()
    summary = {
        "from": args.m_from,
        "to": args.m_to,
        "monogenic_possible": possible,
        "non_monogenic": nonmono,
        "skipped": skipped,
        "uncertified": uncertified,
    }
    _emit(
        args,
        summary,
        f"scanned [{args.m_from}, {args.m_to}]: {nonmono} non-monogenic, {skipped} skipped, "
        f"uncertified {uncertified}\nmonogenic-possible: {possible}",
    )
    return EXIT_FALSE if uncertified else EXIT_OK


def cmd_disc(args):
    K = SexticField(args.m)
    df = discriminant(K.f)
    B = instantiate_basis(args.m)
    dk = basis_discriminant(B)
    _emit(
        args,
        {"m": args.m, "q": K.q, "disc_f": df, "disc_K": dk, "ell": B.ell},
        f"disc(f_m) = {df}  (6^6 * q^5 = {6**6 * K.q**5})\nD_K = {dk}  (2^{2 * B.ell} * q^5 = {B.claimed_discriminant()})",
    )
    return EXIT_OK


def cmd_basis(args):
    B = instantiate_basis(args.m)
    t = B.template
    payload = {
        "m": args.m,
        "r": B.template_r,
        "ell": t.ell,
        "numerators": [list(n) for n in t.numerators],
        "denominators": list(t.denominators),
    }
    human = f"m={args.m} (r={B.template_r}, template {t.label}):\n  " + ", ".join(
        t.format_element(i) for i in range(6)
    )
    _emit(args, payload, human)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON record per result")

    with_m = argparse.ArgumentParser(add_help=False, parents=[common])
    with_m.add_argument("-m", type=int, required=True, help="field parameter m")

    parser = argparse.ArgumentParser(prog="simplest-sextic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", parents=[with_m], help="certify the integral basis B_m")
    p.add_argument("--trial-bound", type=_positive, default=TRIAL_DIVISION_BOUND)
    p.set_defaults(func=cmd_certify)

    for name, func, text in (("index", cmd_index, "index of sum y_i b_i"),
                             ("factors", cmd_factors, "index form factors G1, G2, |G3|")):
        p = sub.add_parser(name, parents=[with_m], help=text)
        p.add_argument("-y", type=_coords, action="append", required=True,
                       help="coordinates y2,...,y6 (repeatable)")
        p.set_defaults(func=func)

    p = sub.add_parser("verify-table", parents=[with_m], help="check the generator table (m = 1 or -1)")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("search", parents=[with_m], help="box search for index-1 elements")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--work-limit", type=_positive, default=mono.DEFAULT_WORK_LIMIT)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", parents=[common], help="certify and test a range of m")
    p.add_argument("--from", dest="m_from", type=int, required=True)
    p.add_argument("--to", dest="m_to", type=int, required=True)
    p.add_argument("--out", help="write one JSON record per m to this file")
    p.add_argument("--samples", type=int, default=mono.DEFAULT_SAMPLES)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("disc", parents=[with_m], help="polynomial and field discriminants")
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("basis", parents=[with_m], help="print B_m")
    p.set_defaults(func=cmd_basis)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, UndecidedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
