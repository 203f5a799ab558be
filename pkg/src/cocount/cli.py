"""Command-line front end.

Subcommands: ``count``, ``profile``, ``verify``, ``generate``, ``bench``.
Results go to standard output, one item per line; diagnostics go to
standard error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional

from . import bench as benchmod
from . import counting as cnt
from . import oracle
from .errors import CocountError, GraphPosetMismatch, KOutOfRange, UnsupportedCombination
from .formats import dump_perm, dump_poset, load
from .graphs import complement, incomparability_graph, permutation_model, validate_orientation
from .posets import LinearExtension, Poset, cover_relation, linear_extension

TARGETS = ("independent-sets", "cliques", "both")
COUNT_VARIANTS = (
    "all", "maximal", "by-size", "maximal-by-size", "profile", "maximal-profile", "polynomial", "alpha",
)
LABELS = {"independent-sets": "independent_sets", "cliques": "cliques"}


class _Instance:
    """One poset per target, each paired with a linear extension and, when
    already built, its incomparability graph."""

    def __init__(self, fmt: str, data, validate: bool):
        if fmt == "poset":
            p: Poset = data
            if validate:
                p.validate()
            le = linear_extension(p)
            # cliques of the comparability graph oriented by p are the chains of p
            self.posets = {"independent-sets": (p, le, None), "cliques": (p, le, None)}
        else:
            model = permutation_model(data)
            if validate:
                if not validate_orientation(model.graph, model.is_poset):
                    raise GraphPosetMismatch("inversion graph disagrees with its poset")
                if not validate_orientation(complement(model.graph), model.clique_poset):
                    raise GraphPosetMismatch("complement of inversion graph disagrees with its poset")
            le = LinearExtension.from_order(range(1, model.n + 1))
            self.posets = {
                "independent-sets": (model.is_poset, le, model.graph),
                "cliques": (model.clique_poset, le, None),
            }
        self.validate = validate


def _parse_x(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _parse_mod(text: str) -> int:
    try:
        mod = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not (3 <= mod < 1 << 64 and mod % 2 == 1):
        raise argparse.ArgumentTypeError("modulus must be an odd integer in [3, 2**64)")
    return mod


def _format_number(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def _lines_for(p: Poset, le: LinearExtension, g, args) -> list[str]:
    variant, mod = args.variant, args.mod
    n = p.n
    if variant in ("by-size", "maximal-by-size") and args.k is None:
        raise UnsupportedCombination(f"--variant {variant} needs --k")
    if args.k is not None and not 0 <= args.k <= n:
        raise KOutOfRange(f"--k {args.k} outside 0..{n}")
    if variant == "all":
        total = cnt.count_is_fast(g, p, le, mod, validate=args.validate)
        if args.exclude_empty:
            total = (total - 1) % mod if mod else total - 1
        return [str(total)]
    if variant == "maximal":
        return [str(cnt.count_maximal_is(cover_relation(p), le, mod))]
    if variant == "by-size":
        return [str(cnt.count_is_by_size(p, le, args.k, g, mod).counts[args.k])]
    if variant == "maximal-by-size":
        return [str(cnt.count_maximal_is_by_size(cover_relation(p), le, args.k, mod).counts[args.k])]
    k = n if args.k is None else args.k
    if variant == "profile":
        prof = cnt.count_is_by_size(p, le, k, g, mod)
        return [f"{i} {c}" for i, c in enumerate(prof.counts)]
    if variant == "maximal-profile":
        prof = cnt.count_maximal_is_by_size(cover_relation(p), le, k, mod)
        return [f"{i} {c}" for i, c in enumerate(prof.counts)]
    if variant == "polynomial":
        if args.x is None:
            raise UnsupportedCombination("--variant polynomial needs --x")
        if mod and args.x.denominator != 1:
            raise UnsupportedCombination("modular evaluation needs an integer --x")
        x = args.x.numerator if args.x.denominator == 1 else args.x
        value = cnt.independence_polynomial_eval(cnt.count_is_by_size(p, le, n, g, mod), x)
        return [_format_number(value)]
    if variant == "alpha":
        if mod:
            raise UnsupportedCombination("--variant alpha needs exact arithmetic; drop --mod")
        alpha, count = cnt.alpha_and_maximum_count(cnt.count_is_by_size(p, le, n, g))
        return [f"{alpha} {count}"]
    raise UnsupportedCombination(f"unknown variant {variant!r}")


def cmd_count(args) -> int:
    if args.format == "graph":
        raise UnsupportedCombination(
            "bare graphs cannot be counted (no orientation); use 'verify --format graph' for oracle counts"
        )
    inst = _Instance(args.format, load(args.input, args.format), args.validate)
    targets = ["independent-sets", "cliques"] if args.target == "both" else [args.target]
    for target in targets:
        p, le, g = inst.posets[target]
        for line in _lines_for(p, le, g, args):
            print(f"{LABELS[target]} {line}" if len(targets) > 1 else line)
    return 0


def cmd_profile(args) -> int:
    args.variant = "maximal-profile" if args.variant == "maximal" else "profile"
    return cmd_count(args)


def _checks_for_poset(p: Poset, g=None) -> list[tuple[str, object, object]]:
    """``(name, engine value, oracle value)`` triples for one instance."""
    le = linear_extension(p)
    ep = cover_relation(p)
    g_inc = incomparability_graph(p)
    all_sets = oracle.enumerate_is(g_inc)
    maximal = oracle.enumerate_is(g_inc, "maximal")
    n = p.n
    prof = cnt.count_is_by_size(p, le, n, g)
    mprof = cnt.count_maximal_is_by_size(ep, le, n)
    a_tab = cnt.is_table(p, le)
    b_tab = cnt.maximal_table(ep, le)
    fast_tab = cnt.is_table_fast(g if g is not None else g_inc, p, le, validate=True)
    checks = [
        ("independent_sets", cnt.count_is(p, le), all_sets.total),
        ("independent_sets_fast", fast_tab.total, all_sets.total),
        ("maximal_independent_sets", cnt.count_maximal_is(ep, le), maximal.total),
        ("profile", prof.counts, all_sets.size_profile(n)),
        ("maximal_profile", mprof.counts, maximal.size_profile(n)),
        ("alpha", cnt.alpha_and_maximum_count(prof), (all_sets.alpha, all_sets.maximum_count)),
        ("fast_table", fast_tab.values, a_tab.values),
    ]
    for v in range(0, n + 2):
        checks.append((f"a[{v}]", a_tab[v], oracle.enumerate_anchored(p, v).total))
        checks.append((f"b[{v}]", b_tab[v], oracle.enumerate_anchored(p, v, "maximal").total))
    return checks


def cmd_verify(args) -> int:
    fmt = args.format
    if args.input is None:
        spec = oracle.GeneratorSpec(args.n, args.density, args.seed)
        data = oracle.random_permutation(spec) if fmt == "perm" else oracle.random_poset(spec)
        fmt = fmt if fmt == "perm" else "poset"
    else:
        data = load(args.input, fmt)
    if fmt == "graph":
        print(f"oracle independent_sets {oracle.enumerate_is(data).total}")
        print(f"oracle maximal_independent_sets {oracle.enumerate_is(data, 'maximal').total}")
        print(f"oracle cliques {oracle.enumerate_cliques(data).total}")
        print(f"oracle maximal_cliques {oracle.enumerate_cliques(data, 'maximal').total}")
        return 0
    if fmt == "perm":
        model = permutation_model(data)
        checks = [(f"is:{name}", e, o) for name, e, o in _checks_for_poset(model.is_poset, model.graph)]
        checks += [(f"clique:{name}", e, o) for name, e, o in _checks_for_poset(model.clique_poset)]
        ind, cliq = cnt.permutation_counts(model)
        checks.append(("perm_independent_sets", ind, oracle.enumerate_is(model.graph).total))
        checks.append(("perm_cliques", cliq, oracle.enumerate_cliques(model.graph).total))
    else:
        checks = _checks_for_poset(data)
    failed = 0
    for name, engine, truth in checks:
        if engine == truth:
            print(f"PASS {name}")
        else:
            failed += 1
            print(f"FAIL {name}: engine {engine} oracle {truth}")
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=sys.stderr)
    return 1 if failed else 0


def cmd_generate(args) -> int:
    spec = oracle.GeneratorSpec(args.n, args.density, args.seed)
    if args.format == "perm":
        sys.stdout.write(dump_perm(oracle.random_permutation(spec)))
    elif args.format == "poset":
        sys.stdout.write(dump_poset(oracle.random_poset(spec)))
    else:
        raise UnsupportedCombination("generate supports --format poset or perm")
    return 0


def cmd_bench(args) -> int:
    rows = benchmod.run_bench(mod=args.mod or benchmod.DEFAULT_MOD, seed=args.seed, start=args.n)
    for row in rows:
        print(f"{row.family} {row.n} {row.m_star} {row.seconds:.6f}")
    for family, n, ratio in benchmod.doubling_ratios(rows):
        print(f"{family} n={n}: time growth / work growth = {ratio:.2f}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocount",
        description="Exact counts of independent sets and cliques in cocomparability, "
        "comparability and permutation graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, input_required=True):
        if input_required:
            sp.add_argument("input", help="instance file")
        else:
            sp.add_argument("input", nargs="?", help="instance file (random instance if omitted)")
        sp.add_argument("--format", choices=("poset", "perm", "graph"), default="poset")

    def counting_flags(sp):
        sp.add_argument("--target", choices=TARGETS, default="independent-sets")
        sp.add_argument("--k", type=int)
        sp.add_argument("--x", type=_parse_x)
        sp.add_argument("--mod", type=_parse_mod)
        sp.add_argument("--exclude-empty", action="store_true", help="drop the empty set from 'all' totals")
        sp.add_argument("--validate", action="store_true", help="full O(n^2) consistency checks")

    sp = sub.add_parser("count", help="print a count")
    common(sp)
    counting_flags(sp)
    sp.add_argument("--variant", choices=COUNT_VARIANTS, default="all")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("profile", help="print 'k count' lines for sizes 0..n (or 0..--k)")
    common(sp)
    counting_flags(sp)
    sp.add_argument("--variant", choices=("all", "maximal"), default="all")
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("verify", help="cross-check the engine against brute force")
    common(sp, input_required=False)
    sp.add_argument("--n", type=int, default=8)
    sp.add_argument("--density", type=float, default=0.3)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="write a random instance to standard output")
    sp.add_argument("--format", choices=("poset", "perm"), default="poset")
    sp.add_argument("--n", type=int, default=8)
    sp.add_argument("--density", type=float, default=0.3)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("bench", help="doubling-series timings (modular arithmetic)")
    sp.add_argument("--mod", type=_parse_mod)
    sp.add_argument("--n", type=int, help="first size of every series (default: built-in sizes)")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CocountError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
