"""Command-line front end.

Exit codes: 0 success (or verified), 1 not verified / infinite complement,
2 argument or domain error, 3 guard exceeded, 4 internal construction error.
Errors go to stderr as one line of JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, frobenius, graphs, verify
from .generate import MAX_SYMBOLS, Algorithm, Preference, choose_algorithm, generate
from .errors import ConstructionError, GuardExceeded, MultishiftError
from .words import DbParams, Word, render

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_GUARD, EXIT_INTERNAL = 0, 1, 2, 3, 4

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _params(args) -> DbParams:
    return DbParams(args.alphabet, args.shift, args.order)


def _emit(out, args, payload: dict, plain: str):
    if args.format == "json":
        print(json.dumps(payload), file=out)
    else:
        print(plain, file=out)


def cmd_generate(args, out):
    p = _params(args)
    alg = Algorithm(args.algorithm)
    if alg is Algorithm.AUTO:
        alg = choose_algorithm(p)
    w = generate(p, alg, Preference(args.prefer), max_symbols=args.max_symbols)
    text = render(w, p.a)
    _emit(out, args, {"word": text, "length": len(w), "algorithm": alg.value}, text)
    return EXIT_OK


def cmd_verify(args, out):
    p = _params(args)
    text = sys.stdin.read() if args.word == "-" else args.word
    report = verify.is_multishift_db(Word(text), p)
    d = report.to_dict()
    plain = "\n".join(f"{k}: {json.dumps(v)}" for k, v in d.items())
    _emit(out, args, d, plain)
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_count(args, out):
    res = counting.count_formula(_params(args), max_digits=args.max_digits)
    plain = str(res.exact) if res.exact is not None else f"~10^{res.log10:.6f}"
    _emit(out, args, res.to_dict(), plain)
    return EXIT_OK


def cmd_enumerate(args, out):
    count, words = counting.enumerate_all(_params(args), cap=args.cap, collect=args.words)
    a = args.alphabet
    listed = [render(w, a) for w in words] if words is not None else None
    payload = {"count": str(count)}
    if args.words:
        payload["words"] = listed
    lines = [str(count)] + (listed or [])
    _emit(out, args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_graph(args, out):
    g = graphs.build_word_graph(args.alphabet, args.shift, args.order,
                                max_vertices=args.max_vertices)
    deg_in, deg_out = g.indegrees(), g.outdegrees()
    balanced = deg_in == deg_out and len(set(deg_out)) == 1
    payload = {
        "vertices": g.num_vertices,
        "arcs": g.num_arcs,
        "degree": g.degree if balanced else None,
        "connected": g.is_connected(),
        "arborescences": None,
        "euler_tours": None,
    }
    if g.num_vertices <= graphs.MAX_DET_VERTICES:
        payload["arborescences"] = str(graphs.arborescence_count(g))
        payload["euler_tours"] = str(graphs.euler_count_best(g))
    print(json.dumps(payload), file=out)
    return EXIT_OK


def cmd_frobenius(args, out):
    inst = frobenius.build_instance(args.alphabet, args.shift, args.order, args.tau)
    res = frobenius.longest_nonrepresentable(inst, max_states=args.max_states)
    a = inst.a
    payload = {
        "m": inst.m,
        "n": inst.n,
        "l": inst.l,
        "g": inst.g if inst.m >= 2 else None,
        "tau": render(inst.tau, a),
        "excluded_count": len(inst.excluded),
        "finite": res.finite,
        "longest_length": res.max_length,
        "longest_count": None if res.count is None else str(res.count),
    }
    if args.words and res.words is not None:
        payload["longest_words"] = [render(w, a) for w in res.words]
    print(json.dumps(payload), file=out)
    if args.dump_s:
        for w in inst.generators():
            print(render(w, a), file=out)
    return EXIT_OK if res.finite else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multishift", description="Multi-shift de Bruijn sequences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, order_help="order n"):
        sp.add_argument("-a", "--alphabet", type=int, default=2, help="alphabet size a")
        sp.add_argument("-m", "--shift", type=int, required=True, help="shift m")
        sp.add_argument("-n", "--order", type=int, required=True, help=order_help)
        sp.add_argument("--format", choices=["plain", "json"], default="plain")

    sp = sub.add_parser("generate", help="print one sequence")
    common(sp)
    sp.add_argument("--algorithm", choices=[x.value for x in Algorithm], default="auto")
    sp.add_argument("--prefer", choices=[x.value for x in Preference], default="largest")
    sp.add_argument("--max-symbols", type=int, default=MAX_SYMBOLS)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify", help="check a word ('-' reads stdin)")
    common(sp)
    sp.add_argument("word")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("count", help="number of sequences")
    common(sp)
    sp.add_argument("--max-digits", type=int, default=counting.MAX_DIGITS)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="exhaustive enumeration (small cases)")
    common(sp)
    sp.add_argument("--cap", type=int, default=counting.ENUM_CAP)
    sp.add_argument("--words", action="store_true", help="also list the words (count <= 1024)")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("graph", help="word graph G(m, n) statistics (JSON)")
    common(sp, order_help="vertex word length n")
    sp.add_argument("--max-vertices", type=int, default=graphs.MAX_VERTICES)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("frobenius", help="free-monoid Frobenius construction (JSON)")
    common(sp, order_help="long word length n (> m)")
    sp.add_argument("--tau", help="seed sequence; generated when omitted")
    sp.add_argument("--words", action="store_true", help="list the longest words")
    sp.add_argument("--dump-s", action="store_true", help="print every word of S, one per line")
    sp.add_argument("--max-states", type=int, default=frobenius.MAX_STATES)
    sp.set_defaults(func=cmd_frobenius)
    return parser


def _fail(err, kind, message, code):
    print(json.dumps({"error": kind, "message": message}), file=err)
    return code


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as e:
        return _fail(err, "usage", str(e), EXIT_USAGE)
    except GuardExceeded as e:
        return _fail(err, type(e).__name__, str(e), EXIT_GUARD)
    except ConstructionError as e:
        return _fail(err, type(e).__name__, str(e), EXIT_INTERNAL)
    except (MultishiftError, IndexError, ValueError) as e:
        return _fail(err, type(e).__name__, str(e), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
