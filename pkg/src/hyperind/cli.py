"""hyperind command line.

Exit codes: 0 success, 1 a report check failed (catalogue mismatch, theorem
counterexample, unsound move), 2 malformed arguments, 3 guard violation or
bad input, 4 infeasible parameters.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from .downset import (Downset, corners, downset_cost, downset_of, downset_space,
                      downset_to_record, full_shadow, horizontal_distance_vector,
                      i2_of_downset, is_231_lex_style, parse_downset)
from .hypergraph import complete_hypergraph, count_s_independent, describe_graph, \
    read_edge_list, write_edge_list
from .moves import all_applicable_moves, witness_holds
from .optimizer import (EXCEPTIONS_COMPUTED, EXCEPTIONS_REFERENCE, InfeasibleError, classify,
                        conjecture_check, optimize, pareto, reproduce_table,
                        verify_main_theorem)
from .orders import initial_segment, lex_perm, parse_permutation, pi_lex_sets
from .shifting import fully_shift, shift

EXIT_FAIL, EXIT_USAGE, EXIT_GUARD, EXIT_INFEASIBLE = 1, 2, 3, 4


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(args, rec: dict, text: str):
    if args.format == "structured":
        print(json.dumps(rec, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _hypergraph(args):
    if args.input is not None:
        return read_edge_list(_read(args.input))
    if args.n is not None and args.r is not None:
        return complete_hypergraph(args.n, args.r)
    raise ValueError("give --input FILE or --n and --r for the complete hypergraph")


def _downset(args) -> Downset:
    if args.heights is not None:
        if args.n is None:
            raise ValueError("--heights needs --n")
        return Downset(args.n, [int(x) for x in args.heights.split(",") if x.strip()])
    if args.input is not None:
        return parse_downset(_read(args.input))
    raise ValueError("give --heights with --n, or --input FILE holding a downset record")


def _record_line(rec) -> str:
    hs = ",".join(map(str, rec.witness.heights)) or "-"
    return f"n={rec.n} e={rec.e} cost={rec.min_cost} heights={hs} tag={rec.classification}" \
           f" shadow={rec.shadow_description or '-'}"


# -------------------------------------------------------------- commands

def cmd_count(args):
    H = _hypergraph(args)
    v = count_s_independent(H, args.s)
    _emit(args, {"n": H.n, "r": H.r, "s": args.s, "count": v}, str(v))
    return 0


def cmd_shift(args):
    H = _hypergraph(args)
    if args.i is None and args.j is None:
        G = fully_shift(H)
    elif args.i is None or args.j is None:
        raise ValueError("give both --i (source) and --j (target), or neither for a full shift")
    else:
        G = shift(H, args.i, args.j)
    if args.format == "structured":
        print(json.dumps({"n": G.n, "r": G.r, "edges": [list(e) for e in G.sorted_edges()]}))
    else:
        sys.stdout.write(write_edge_list(G))
    return 0


def cmd_orders(args):
    if args.n is None or args.e is None:
        raise ValueError("orders needs --n and --e")
    pi = parse_permutation(args.pi) if args.pi else lex_perm(args.r or 3)
    r = len(pi)
    if args.r is not None and args.r != r:
        raise ValueError("--r disagrees with the length of --pi")
    H = initial_segment(pi, args.n, r, args.e)  # validates e
    # listed in pi-lex order rather than sorted order
    seq = list(islice(pi_lex_sets(pi, args.n), args.e))
    if args.format == "structured":
        print(json.dumps({"n": H.n, "r": r, "pi": list(pi), "edges": [list(e) for e in seq]}))
    else:
        print(f"{H.n} {r}")
        for e in seq:
            print(" ".join(map(str, e)))
    return 0


def _downset_info(D: Downset) -> dict:
    tag = classify(D)
    return {**downset_to_record(D), "cost": downset_cost(D), "space": downset_space(D),
            "i2": i2_of_downset(D), "corners": [list(c) for c in corners(D)],
            "distance_vector": horizontal_distance_vector(D),
            "lex_style": is_231_lex_style(D), "tag": tag,
            "shadow": describe_graph(full_shadow(D)) if D.size else None}


def cmd_downset(args):
    if args.edges is not None:
        D = downset_of(read_edge_list(_read(args.edges)))
    else:
        D = _downset(args)
    info = _downset_info(D)
    text = "\n".join(f"{k}: {v}" for k, v in info.items())
    _emit(args, info, text)
    return 0


def cmd_moves(args):
    D = _downset(args)
    status = 0
    for mv in all_applicable_moves(D):
        w = mv.witness(D)
        w["holds"] = witness_holds(D, mv)
        w["heights"] = list(w["heights"])
        status |= 0 if w["holds"] else EXIT_FAIL
        text = (f"{w['lemma']}: -{w['removed']} +{w['added']} cost {w['cost'][0]}->{w['cost'][1]}"
                f" space {w['space'][0]}->{w['space'][1]} lex_earlier={w['lex_earlier']}"
                f" holds={w['holds']}")
        _emit(args, w, text)
    return status


def cmd_optimize(args):
    if args.n is None or args.e is None:
        raise ValueError("optimize needs --n and --e")
    rec = optimize(args.n, args.e)
    _emit(args, rec.as_dict(), _record_line(rec))
    return 0


def cmd_pareto(args):
    if args.n is None:
        raise ValueError("pareto needs --n")
    for rec in pareto(args.n).entries:
        _emit(args, rec.as_dict(), _record_line(rec))
    return 0


def cmd_reproduce_table(args):
    cat = EXCEPTIONS_COMPUTED if args.catalogue == "computed" else EXCEPTIONS_REFERENCE
    status = 0
    for row in reproduce_table(args.lo, args.hi, cat):
        rec = {"n": row.n, "found": {k: [[e, list(h)] for e, h in v] for k, v in row.found.items()},
               "expected": list(row.expected), "missing": row.missing, "extra": row.extra,
               "persistent": [list(h) for h in row.persistent_seen],
               "ties": [list(t) for t in row.ties], "match": row.match}
        names = ", ".join(sorted(row.found)) or "-"
        text = f"n={row.n} found={{{names}}} match={'yes' if row.match else 'NO'}"
        if not row.match:
            text += f" missing={row.missing} extra={row.extra}"
            status = EXIT_FAIL
        _emit(args, rec, text)
    return status


def cmd_verify_theorem(args):
    status = 0
    for n in range(args.lo, args.hi + 1):
        rep = verify_main_theorem(n)
        rec = {"n": n, "passed": rep.passed, "counts": rep.counts,
               "counterexamples": [r.as_dict() for r in rep.counterexamples]}
        counts = " ".join(f"{k}={v}" for k, v in rep.counts.items())
        _emit(args, rec, f"n={n} passed={rep.passed} {counts}")
        if not rep.passed:
            status = EXIT_FAIL
    return status


def cmd_conjecture_check(args):
    if None in (args.r, args.s, args.n, args.e):
        raise ValueError("conjecture-check needs --r --s --n --e")
    rep = conjecture_check(args.r, args.s, args.n, args.e)
    rec = {"r": rep.r, "s": rep.s, "n": rep.n, "e": rep.e, "best": rep.best,
           "candidate": rep.candidate, "ratio": str(rep.ratio), "families": rep.families}
    _emit(args, rec, " ".join(f"{k}={v}" for k, v in rec.items()))
    return 0


COMMANDS = {
    "count": cmd_count, "shift": cmd_shift, "orders": cmd_orders, "downset": cmd_downset,
    "moves": cmd_moves, "optimize": cmd_optimize, "pareto": cmd_pareto,
    "reproduce-table": cmd_reproduce_table, "verify-theorem": cmd_verify_theorem,
    "conjecture-check": cmd_conjecture_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperind", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, *flags):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("text", "structured"), default="text")
        for f in flags:
            if f in ("n", "e", "s", "r", "i", "j"):
                sp.add_argument(f"--{f}", type=int)
            elif f in ("input", "pi", "heights", "edges"):
                sp.add_argument(f"--{f}")
        return sp

    add("count", "count s-independent sets of an edge list", "input", "n", "r", "s") \
        .set_defaults(s=2)
    add("shift", "apply S_{i->j}, or shift fully when no pair is given", "input", "n", "r", "i", "j")
    add("orders", "initial segment of the pi-lex order", "n", "r", "e", "pi")
    add("downset", "cost, space and structure of a downset", "n", "heights", "input", "edges")
    add("moves", "applicable local moves and their witnesses", "n", "heights", "input")
    add("optimize", "minimum-cost lex-earliest downset for (n, e)", "n", "e")
    add("pareto", "optimal records for every e", "n")
    for name, help_, lo, hi in (("reproduce-table", "exception shadows against the catalogue", 7, 31),
                                ("verify-theorem", "check the large-n characterization", 32, 32)):
        sp = add(name, help_)
        sp.add_argument("--from", dest="lo", type=int, default=lo)
        sp.add_argument("--to", dest="hi", type=int, default=hi)
        if name == "reproduce-table":
            sp.add_argument("--catalogue", choices=("reference", "computed"), default="reference")
    add("conjecture-check", "best shifted family against the conjectured order", "r", "s", "n", "e")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
