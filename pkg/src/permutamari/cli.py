"""Command-line interface.

Verbs: enumerate, convert, op, hasse, verify, stats.  All results go to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 verification
failure (with the JSON report on stdout), 2 usage or value errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import Sequence

from . import brackets, embedding, lattices, perm, tamari
from .perm import InversionSet, Permutation
from .reports import VerifyReport
from .tamari import BracketingFn

MAX_ENUM_PERM = 10
MAX_HASSE_PERM = 6
MAX_HASSE_TAMARI = 8
MAX_CHECK = 5
MAX_ROUNDTRIP = 10


def _parse_fn(text: str) -> BracketingFn:
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None
    return BracketingFn(values)


def _parse_perm(text: str) -> Permutation:
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None
    return Permutation(values)


def _parse_invset(text: str) -> InversionSet:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "pairs" not in data:
        raise ValueError('inversion sets are JSON objects {"n": N, "pairs": [[a,b],...]}')
    return InversionSet.from_json(data)


def _require_range(n: int, hi: int, what: str) -> None:
    if not 1 <= n <= hi:
        raise ValueError(f"--n must be in 1..{hi} for {what}, got {n}")


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    if args.lattice == "tamari":
        if args.format == "dot":
            _require_range(n, MAX_HASSE_TAMARI, "Tamari Hasse diagrams")
            sys.stdout.write(lattices.to_dot(lattices.tamari_lattice(n)))
            return 0
        _require_range(n, 14, "Tamari enumeration")
        if args.format == "table":
            for e in tamari.enumerate_tamari(n):
                print(e)
        else:
            print(json.dumps([e.to_json() for e in tamari.enumerate_tamari(n)]))
        return 0
    if args.format == "dot":
        _require_range(n, MAX_HASSE_PERM, "permutation Hasse diagrams")
        view = lattices.perm_lattice(n)
        sys.stdout.write(lattices.to_dot(view, label=lambda a: str(perm.realize(a))))
        return 0
    _require_range(n, MAX_ENUM_PERM, "permutation enumeration")
    if args.format == "table":
        for p in perm.enumerate_permutations(n):
            print(p)
    else:
        print(json.dumps([p.to_json() for p in perm.enumerate_permutations(n)]))
    return 0


def _as_fn(obj) -> BracketingFn:
    if isinstance(obj, BracketingFn):
        return obj
    if isinstance(obj, (int, tuple)):
        return brackets.to_bracketing_fn(obj)
    if isinstance(obj, InversionSet):
        return embedding.phi_inverse(obj)
    return embedding.phi_inverse(perm.inversions(obj))


def _as_invset(obj) -> InversionSet:
    if isinstance(obj, InversionSet):
        return obj
    if isinstance(obj, Permutation):
        return perm.inversions(obj)
    return embedding.phi(_as_fn(obj))


def cmd_convert(args: argparse.Namespace) -> int:
    src, dst, value = args.src, args.dst, args.value
    obj: object
    if src == "word":
        obj = brackets.parse_word(value)
    elif src == "fn":
        obj = _parse_fn(value)
    elif src == "perm":
        obj = _parse_perm(value)
    else:
        obj = _parse_invset(value)

    if dst == "word":
        print(brackets.word_for_tree(_as_tree(obj)))
    elif dst == "tree":
        print(json.dumps(brackets.tree_to_json(_as_tree(obj))))
    elif dst == "fn":
        print(_as_fn(obj))
    elif dst == "invset":
        print(json.dumps(_as_invset(obj).to_json()))
    else:
        print(perm.realize(_as_invset(obj)))
    return 0


def _as_tree(obj):
    if isinstance(obj, (int, tuple)):
        return obj
    return brackets.from_bracketing_fn(_as_fn(obj))


def cmd_op(args: argparse.Namespace) -> int:
    if args.lattice == "tamari":
        if args.values == "perm":
            raise ValueError("--as perm applies to --lattice perm only")
        e, f = _parse_fn(args.a), _parse_fn(args.b)
        print(tamari.join(e, f) if args.kind == "join" else tamari.meet(e, f))
        return 0
    op = perm.join if args.kind == "join" else perm.meet
    if args.values == "perm":
        a = perm.inversions(_parse_perm(args.a))
        b = perm.inversions(_parse_perm(args.b))
        print(perm.realize(op(a, b)))
    else:
        result = op(_parse_invset(args.a), _parse_invset(args.b))
        print(json.dumps(result.to_json()))
    return 0


def cmd_hasse(args: argparse.Namespace) -> int:
    n = args.n
    if args.lattice == "tamari":
        if args.mark_image:
            raise ValueError("--mark-image applies to --lattice perm only")
        _require_range(n, MAX_HASSE_TAMARI, "Tamari Hasse diagrams")
        sys.stdout.write(lattices.to_dot(lattices.tamari_lattice(n)))
        return 0
    _require_range(n, MAX_HASSE_PERM, "permutation Hasse diagrams")
    view = lattices.perm_lattice(n)
    mark = [a for a in view.elements if embedding.satisfies_I2star(a)] if args.mark_image else ()
    sys.stdout.write(lattices.to_dot(view, label=lambda a: str(perm.realize(a)), mark=mark))
    return 0


def _verify_semidistributive(n: int) -> VerifyReport:
    _require_range(n, MAX_CHECK, "semidistributivity checks")
    t0 = time.perf_counter()
    sp = lattices.check_semidistributive(lattices.perm_lattice(n))
    st = lattices.check_semidistributive(lattices.tamari_lattice(n))
    checks = {
        "perm_sd_join": sp.sd_join,
        "perm_sd_meet": sp.sd_meet,
        "tamari_sd_join": st.sd_join,
        "tamari_sd_meet": st.sd_meet,
    }
    witness = None
    for name, verdict, w in (
        ("perm_sd_join", sp.sd_join, sp.sd_join_witness),
        ("perm_sd_meet", sp.sd_meet, sp.sd_meet_witness),
        ("tamari_sd_join", st.sd_join, st.sd_join_witness),
        ("tamari_sd_meet", st.sd_meet, st.sd_meet_witness),
    ):
        if not verdict:
            witness = {"check": name, "triple": [str(x) for x in w]}
            break
    sn, tn = math.factorial(n), sum(1 for _ in tamari.enumerate_tamari(n))
    return VerifyReport(
        n=n,
        elements=sn + tn,
        pairs_checked=sn**3 + tn**3,
        checks=checks,
        witness=witness,
        millis=int((time.perf_counter() - t0) * 1000),
    )


def _verify_bounded(n: int) -> VerifyReport:
    _require_range(n, MAX_CHECK, "boundedness checks")
    t0 = time.perf_counter()
    bp = lattices.check_bounded(lattices.perm_lattice(n))
    bt = lattices.check_bounded(lattices.tamari_lattice(n))
    checks = {
        "perm_lower_bounded": bp.lower_bounded,
        "perm_upper_bounded": bp.upper_bounded,
        "tamari_lower_bounded": bt.lower_bounded,
        "tamari_upper_bounded": bt.upper_bounded,
    }
    witness = None
    for name, ok, w in (
        ("perm_lower_bounded", bp.lower_bounded, bp.lower_witness),
        ("perm_upper_bounded", bp.upper_bounded, bp.upper_witness),
        ("tamari_lower_bounded", bt.lower_bounded, bt.lower_witness),
        ("tamari_upper_bounded", bt.upper_bounded, bt.upper_witness),
    ):
        if not ok:
            witness = {"check": name, "cycle": [str(x) for x in w]}
            break
    sn, tn = math.factorial(n), sum(1 for _ in tamari.enumerate_tamari(n))
    return VerifyReport(
        n=n,
        elements=sn + tn,
        pairs_checked=0,
        checks=checks,
        witness=witness,
        millis=int((time.perf_counter() - t0) * 1000),
    )


def _verify_roundtrip(n: int) -> VerifyReport:
    """Word/tree/function conversions and the realization map are mutually
    inverse: word -> tree -> fn -> tree -> word is the identity on all
    bracketings of n+1 letters, phi_inverse undoes phi on T_n, and realize
    undoes inversions on S_min(n,7)."""
    _require_range(n, MAX_ROUNDTRIP, "roundtrip checks")
    t0 = time.perf_counter()
    checks = {"word_fn_word": True, "phi_roundtrip": True, "realize_roundtrip": True}
    witness = None
    trees = 0
    for t in brackets.enumerate_trees(n + 1):
        trees += 1
        word = brackets.word_for_tree(t)
        back = brackets.from_bracketing_fn(brackets.to_bracketing_fn(brackets.parse_word(word)))
        if back != t or brackets.word_for_tree(back) != word:
            checks["word_fn_word"] = False
            witness = {"check": "word_fn_word", "word": word}
            break
    if witness is None:
        for e in tamari.enumerate_tamari(n):
            if embedding.phi_inverse(embedding.phi(e)) != e:
                checks["phi_roundtrip"] = False
                witness = {"check": "phi_roundtrip", "E": str(e)}
                break
    count_perm = 0
    if witness is None:
        for p in perm.enumerate_permutations(min(n, 7)):
            count_perm += 1
            if perm.realize(perm.inversions(p)) != p:
                checks["realize_roundtrip"] = False
                witness = {"check": "realize_roundtrip", "perm": str(p)}
                break
    return VerifyReport(
        n=n,
        elements=trees + count_perm,
        pairs_checked=0,
        checks=checks,
        witness=witness,
        millis=int((time.perf_counter() - t0) * 1000),
    )


def cmd_verify(args: argparse.Namespace) -> int:
    if args.kind == "embedding":
        report = embedding.verify_embedding(args.n, samples=args.samples, seed=args.seed)
    elif args.kind == "height":
        report = embedding.verify_height(args.n)
    elif args.kind == "semidistributive":
        report = _verify_semidistributive(args.n)
    elif args.kind == "bounded":
        report = _verify_bounded(args.n)
    else:
        report = _verify_roundtrip(args.n)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.ok else 1


def cmd_stats(args: argparse.Namespace) -> int:
    n = args.n
    _require_range(n, 14, "stats")
    s_count = math.factorial(n)
    t_count = sum(1 for _ in tamari.enumerate_tamari(n))
    s_top = perm.rank(perm.top(n))
    t_top = tamari.height(tamari.top(n))
    s_atoms = len(perm.covers_up(perm.bottom(n)))
    t_atoms = sum(1 for e in tamari.enumerate_tamari(n) if tamari.height(e) == 1)
    rows = [
        (f"|S_{n}|", s_count),
        (f"|T_{n}|", t_count),
        (f"S_{n} top height", s_top),
        (f"T_{n} top height", t_top),
        (f"S_{n} atoms", s_atoms),
        (f"T_{n} atoms", t_atoms),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permutamari",
        description="Weak order on permutations, the Tamari lattice, and the "
        "height-preserving embedding between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all lattice elements")
    p.add_argument("--lattice", choices=["perm", "tamari"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["table", "json", "dot"], default="table")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("convert", help="convert between words, trees, functions, "
                                       "permutations and inversion sets")
    p.add_argument("--from", dest="src", choices=["word", "fn", "perm", "invset"],
                   required=True)
    p.add_argument("--to", dest="dst", choices=["word", "fn", "perm", "invset", "tree"],
                   required=True)
    p.add_argument("value")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("op", help="join or meet of two elements")
    p.add_argument("kind", choices=["join", "meet"])
    p.add_argument("--lattice", choices=["perm", "tamari"], required=True)
    p.add_argument("--as", dest="values", choices=["invset", "perm"], default="invset",
                   help="input/output style for --lattice perm (default: invset JSON)")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("hasse", help="DOT text of the Hasse diagram")
    p.add_argument("--lattice", choices=["perm", "tamari"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mark-image", action="store_true",
                   help="highlight the Tamari image inside the permutation lattice")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="run a verification suite, print a JSON report")
    p.add_argument("kind", choices=["embedding", "height", "semidistributive",
                                    "bounded", "roundtrip"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None,
                   help="check this many seeded random pairs instead of all pairs "
                        "(embedding only)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="recomputed sizes, heights and atom counts")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
