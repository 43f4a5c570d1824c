"""Command-line interface: ``semitree <command> ...``.

Semigroups are given as ``"<3,5,7>"`` (minimal or any generators) or
``"G:{1,2,4}"`` (gap set). Quote them: ``<`` and ``{`` mean something to
most shells.

Exit status is 0 on success, 1 on a usage or input error and 2 when a
verification suite reports a failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import chains as ch
from . import classes as cl
from . import stats as st
from . import tree
from . import tree_a as ta
from . import verify
from .core import canonical_string, parse, to_record
from .errors import SemigroupError

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive(text: str) -> int:
    v = _non_negative(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _default_workers() -> int:
    raw = os.environ.get("SEMITREE_WORKERS", "1")
    try:
        return _positive(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"SEMITREE_WORKERS: {exc}")


def _parse_seed(text: str) -> dict[int, int]:
    """``"0=5,2=1,4=1"`` -> ``{0: 5, 2: 1, 4: 1}``; a bare label counts once."""
    out: dict[int, int] = {}
    for piece in filter(None, (p.strip() for p in text.split(","))):
        label, _, count = piece.partition("=")
        try:
            k, v = int(label), int(count or 1)
        except ValueError:
            raise UsageError(f"bad seed entry {piece!r}; expected label or label=count")
        if k < 0 or v < 0:
            raise UsageError(f"bad seed entry {piece!r}; labels and counts are non-negative")
        out[k] = out.get(k, 0) + v
    return out


def build_parser() -> argparse.ArgumentParser:
    workers = _default_workers()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write results to this file instead of stdout")
    p = _Parser(prog="semitree", description="Explore the tree of numerical semigroups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", parents=[common], help="count semigroups per genus or dump every node")
    e.add_argument("--max-genus", "-g", type=_non_negative, required=True)
    e.add_argument("--dump", action="store_true", help="one tab-separated line per node")
    e.add_argument("--workers", "-j", type=_positive, default=workers)
    e.add_argument("--format", choices=["text", "csv", "json"], default="text")

    i = sub.add_parser("inspect", parents=[common], help="describe one semigroup")
    i.add_argument("semigroup")
    i.add_argument("--format", choices=["text", "json"], default="text")

    c = sub.add_parser("chains", parents=[common], help="infinite-chain analysis, one JSON object per line")
    group = c.add_mutually_exclusive_group(required=True)
    group.add_argument("semigroups", nargs="*", default=[])
    group.add_argument("--all", type=_non_negative, metavar="MAX_GENUS",
                       help="analyse every non-trivial node up to this genus")
    c.add_argument("--no-literal", action="store_true",
                   help="skip counting descendants of the base semigroup")

    a = sub.add_parser("tree-a", parents=[common], help="levels of the label tree A or of a seeded recursion")
    a.add_argument("--levels", type=_non_negative, required=True, help="last level to emit")
    a.add_argument("--l", type=int, dest="l", help="starting level of a seeded recursion")
    a.add_argument("--seed", help="seed multiset, e.g. 0=5,2,4")
    a.add_argument("--format", choices=["csv", "json"], default="csv")

    s = sub.add_parser("stats", parents=[common], help="per-genus statistics table")
    s.add_argument("--max-genus", "-g", type=_non_negative, required=True)
    s.add_argument("--include-ordinary", action="store_true",
                   help="count ordinary nodes' generators as strong when removal adds a generator")
    s.add_argument("--workers", "-j", type=_positive, default=workers)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--plot-data", action="store_true", help="emit g, n_g and both bounds only")
    s.add_argument("--eo", action="store_true", help="append the diagonal tables to stderr")

    v = sub.add_parser("verify", parents=[common], help="run property suites")
    v.add_argument("suite", choices=list(verify.SUITES) + list(verify.GROUPS))
    v.add_argument("--max-genus", "-g", type=_non_negative)
    v.add_argument("--workers", "-j", type=_positive, default=workers)
    return p


# -- commands -------------------------------------------------------------------


def cmd_enumerate(args, out):
    if args.dump:
        for line in tree.dump_lines(args.max_genus):
            out.write(line + "\n")
        return EXIT_OK
    counts = tree.level_counts(args.max_genus, workers=args.workers)
    if args.format == "json":
        out.write(json.dumps({"counts": counts}) + "\n")
    elif args.format == "csv":
        out.write("g,n_g\n")
        for g, n in enumerate(counts):
            out.write(f"{g},{n}\n")
    else:
        out.write(" ".join(map(str, counts)) + "\n")
    return EXIT_OK


def _describe(s):
    node = tree.TreeNode.of(s)
    flags = cl.class_flags(s)
    rec = to_record(s)
    rec["canonical"] = canonical_string(s)
    rec["frobenius"] = s.frobenius
    rec["effective"] = [f"{e}{x.value}" for e, x in node.effective_gens]
    rec["kind"] = node.kind.value
    rec["classes"] = flags.names()
    if not s.is_trivial:
        rec["non_gap_intervals"] = cl.non_gap_intervals(s)
        rec["d"] = ch.small_element_gcd(s)
    return rec


def cmd_inspect(args, out):
    s = parse(args.semigroup)
    rec = _describe(s)
    if args.format == "json":
        out.write(json.dumps(rec) + "\n")
        return EXIT_OK
    lines = [
        f"semigroup: {rec['canonical']}",
        f"gaps: {{{','.join(map(str, rec['gaps']))}}}",
        f"conductor: {rec['c']}",
        f"genus: {rec['g']}",
        f"multiplicity: {rec['m']}",
        f"generators: {' '.join(map(str, rec['gens']))}",
        f"effective: {' '.join(rec['effective'])}",
        f"kind: {rec['kind']}",
        f"classes: {' '.join(rec['classes']) or 'none'}",
    ]
    if "d" in rec:
        lines.append(f"d: {rec['d']}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def chain_record(s, literal: bool = True) -> dict:
    a = ch.analyze(s, literal=literal)
    rec = {"semigroup": canonical_string(s), "d": a.d}
    v = a.verdict
    if isinstance(v, ch.FiniteSubtree):
        rec.update(verdict="finite-subtree", max_genus=v.max_genus, deepest=canonical_string(v.deepest))
    elif isinstance(v, ch.FinitelyManyChains):
        rec.update(verdict="finitely-many-chains", count=v.count,
                   witnesses=[canonical_string(w) for w in v.witnesses])
        if literal:
            rec["literal_descendant_count"] = v.literal_descendant_count
    else:
        rec["verdict"] = "infinitely-many-chains"
    return rec


def cmd_chains(args, out):
    literal = not args.no_literal
    if args.all is not None:
        nodes = []
        tree.walk(args.all, lambda n: nodes.append(n.semigroup))
        items = [s for s in nodes if not s.is_trivial]
    else:
        if not args.semigroups:
            raise UsageError("give at least one semigroup or --all MAX_GENUS")
        items = [parse(t) for t in args.semigroups]
    for s in items:
        out.write(json.dumps(chain_record(s, literal)) + "\n")
    return EXIT_OK


def cmd_tree_a(args, out):
    if (args.l is None) != (args.seed is None):
        raise UsageError("--l and --seed go together")
    if args.seed is None:
        start, levels = 0, ta.a_levels(args.levels)
    else:
        seed = ta.LabelMultiset.from_dict(_parse_seed(args.seed))
        ta.check_seed(args.l, seed)
        if args.levels < args.l:
            raise UsageError(f"--levels must be >= --l ({args.l})")
        start, levels = args.l, ta.l_recursion(args.l, seed, args.levels)
    if args.format == "json":
        rows = [{"level": start + k, "total": lv.total, "two_fib": 2 * ta.fibonacci(start + k),
                 "counts": {str(x): v for x, v in lv.counts}} for k, lv in enumerate(levels)]
        out.write(json.dumps(rows) + "\n")
        return EXIT_OK
    width = max(lv.max_label for lv in levels) + 1
    out.write(",".join(["level", "total", "2F"] + [f"label_{x}" for x in range(width)]) + "\n")
    for k, lv in enumerate(levels):
        g = start + k
        row = [g, lv.total, 2 * ta.fibonacci(g)] + [lv[x] for x in range(width)]
        out.write(",".join(map(str, row)) + "\n")
    return EXIT_OK


def cmd_stats(args, out):
    table = st.aggregate(args.max_genus, include_ordinary=args.include_ordinary, workers=args.workers)
    if args.plot_data:
        out.write(st.plot_data(table))
    elif args.format == "json":
        out.write(st.to_json(table, args.include_ordinary))
    else:
        out.write(st.to_csv(table, args.include_ordinary))
    if args.eo and args.max_genus >= 4:
        for offset in (0, 1):
            eo = st.eo_diagonals(table, genus_offset=offset)
            print(f"genus offset {offset}: e {eo.e_prefix()} o {eo.o_prefix()}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, out):
    failed = False
    for name in verify.expand_names(args.suite):
        r = verify.run_suite(name, args.max_genus, args.workers)
        out.write(r.summary() + "\n")
        for note in r.notes:
            out.write(f"  note: {note}\n")
        for msg in r.failures:
            print(f"  {name}: {msg}", file=sys.stderr)
        failed |= not r.ok
    return EXIT_FAILED if failed else EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "inspect": cmd_inspect,
    "chains": cmd_chains,
    "tree-a": cmd_tree_a,
    "stats": cmd_stats,
    "verify": cmd_verify,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.output:
            with open(args.output, "w") as out:
                return COMMANDS[args.command](args, out)
        return COMMANDS[args.command](args, sys.stdout)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SemigroupError as exc:
        print(f"semitree: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"semitree: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
