"""Command line: ``orthocolour {gen,colour,verify,oracle,table}``.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 no applicable construction, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import circulants, cycles, paley, products
from .colouring import Colouring, certify, find_violation
from .errors import BudgetExceededError, NoConstructionError, SizeMismatchError, VerificationError
from .graphs import Graph, CirculantSpec, cartesian_product, circulant, complement, complete, cycle, hamming
from .oracle import DEFAULT_NODE_LIMIT, SearchConfig, Status, exact_orthochromatic, feasible

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_NO_CONSTRUCTION, EXIT_INTERNAL = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    try:
        return Graph.from_dict(_load_json(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


# graph families shared by gen and colour

def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="vertex count (cycle, circulant)")
    p.add_argument("--s", type=_int_list, default=[], help="circulant generators, e.g. 1,8")
    p.add_argument("--q", type=int, help="complete graph order / Hamming alphabet")
    p.add_argument("--d", type=int, help="Hamming dimension")
    p.add_argument("--p", type=int, help="prime (circulant on Z_p^2, Paley)")
    p.add_argument("--r", type=int, default=1, help="Paley exponent, q = p^(2r)")
    p.add_argument("--left", help="graph JSON (product)")
    p.add_argument("--right", help="graph JSON (product)")
    p.add_argument("--graph", help="graph JSON (complement)")


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"{args.family} needs {' '.join(missing)}")


def _build_graph(args) -> Graph:
    fam = args.family
    try:
        if fam == "cycle":
            _need(args, "n")
            return cycle(args.n)
        if fam == "circulant":
            n = args.n if args.n is not None else (args.p * args.p if args.p else None)
            if n is None:
                raise InputError("circulant needs --n or --p")
            return circulant(CirculantSpec(n, frozenset(args.s)))
        if fam == "complete":
            _need(args, "q")
            return complete(args.q)
        if fam == "hamming":
            _need(args, "d", "q")
            return hamming(args.d, args.q)
        if fam == "paley":
            _need(args, "p")
            return paley.paley_graph(paley.PaleySpec(args.p, args.r))
        if fam == "product":
            _need(args, "left", "right")
            return cartesian_product(_load_graph(args.left), _load_graph(args.right))
        if fam == "complement":
            _need(args, "graph")
            return complement(_load_graph(args.graph))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    raise InputError(f"unknown family {fam!r}")


def cmd_gen(args) -> int:
    g = _build_graph(args)
    _emit(g.to_dot() if args.dot else _dump(g.to_dict()), args.out)
    return EXIT_OK


def _colour_cycle(args):
    _need(args, "n")
    if args.n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {args.n}")
    g = cycle(args.n)
    if args.k <= 2:
        pair = cycles.orthogonal_colouring_cycle(args.n)
        return g, list(pair[: args.k])
    s = cycles.k_orthogonal_cycle(args.n)
    if s.k < args.k:
        raise NoConstructionError(
            f"the prime cycle family gives {s.k} colourings of C_{args.n}, asked for {args.k}"
        )
    return g, list(s.colourings[: args.k])


def _colour_circulant(args):
    _need(args, "p")
    if args.k > 2:
        raise NoConstructionError("circulant constructions give pairs only (k <= 2)")
    try:
        spec = CirculantSpec(args.p * args.p, frozenset(args.s))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    g = circulant(spec)
    try:
        pair = circulants.colour_circulant_p2(args.p, spec)
    except NoConstructionError:
        if not args.oracle_fallback:
            raise
        res = feasible(g, 2, args.p, SearchConfig(k=2, node_limit=args.budget))
        if res.status is not Status.WITNESS:
            raise NoConstructionError(
                f"no theorem applies and the exact solver reports {res.status.value} "
                f"for {args.p} colours"
            ) from None
        pair = res.witness.colourings
    return g, list(pair[: args.k])


def _colour_paley(args):
    _need(args, "p")
    try:
        spec = paley.PaleySpec(args.p, args.r)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    qr = paley.paley_graph(spec)
    s = paley.paley_orthogonal_set(spec)
    if s.k < args.k:
        raise NoConstructionError(
            f"coset construction gives (p^r+1)/2 = {s.k} colourings, asked for {args.k}"
        )
    if args.on_paley:
        return qr, list(paley.transfer_to_paley(spec, s).colourings[: args.k])
    return complement(qr), list(s.colourings[: args.k])


def _colour_hamming(args):
    _need(args, "d", "q")
    d, q = args.d, args.q
    if args.k > 2:
        raise NoConstructionError("Hamming constructions give pairs only (k <= 2)")
    if d < 1 or q < 1:
        raise InputError(f"hamming needs d >= 1 and q >= 1, got d={d}, q={q}")
    if q == 2 and d % 4 == 0:
        pair = products.hamming_4d_2_colouring(d // 4)
    elif d % 2:
        raise NoConstructionError(f"odd Hamming graphs H({d},{q}) have no construction")
    else:
        pair = products.hamming_even_colouring(d, q)
    return hamming(d, q), list(pair[: args.k])


COLOURERS = {
    "cycle": _colour_cycle,
    "circulant": _colour_circulant,
    "paley": _colour_paley,
    "hamming": _colour_hamming,
}


def cmd_colour(args) -> int:
    if args.k < 1:
        raise InputError(f"--k must be >= 1, got {args.k}")
    g, cols = COLOURERS[args.family](args)
    s = certify(g, cols)
    print(f"k={s.k} colour_count={s.colour_count}", file=sys.stderr)
    _emit(_dump(s.to_dict()), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        s_doc = _load_json(args.colouring)
        if "colourings" in s_doc:
            cols = [Colouring(tuple(c), s_doc["colour_count"]) for c in s_doc["colourings"]]
        else:
            cols = [Colouring.from_dict(s_doc)]
        violation = find_violation(g, cols)
    except SizeMismatchError as exc:
        raise InputError(str(exc)) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.colouring}: malformed colouring document ({exc})") from None
    if violation:
        print(f"FAIL: {violation}")
        return EXIT_VERIFY
    t = cols[0].colour_count
    if len({c.colour_count for c in cols}) > 1:
        print("FAIL: colourings use different colour counts")
        return EXIT_VERIFY
    print(f"OK: k={len(cols)} colour_count={t} vertices={g.vertex_count}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    cfg = SearchConfig(k=args.k, node_limit=args.budget, symmetry_breaking=not args.no_symmetry)
    if args.t is not None:
        res = feasible(g, args.k, args.t, cfg)
        doc = {"status": res.status.value, "k": args.k, "t": args.t}
        if res.witness is not None:
            doc["witness"] = res.witness.to_dict()
        if args.stats:
            doc["nodes"] = res.nodes
    else:
        try:
            doc = {"exact": exact_orthochromatic(g, args.k, cfg), "k": args.k}
        except BudgetExceededError as exc:
            doc = {"status": "budget_exceeded", "k": args.k, "last_decided_t": exc.last_decided_t}
    _emit(_dump(doc), args.out)
    return EXIT_OK


def _constructed_cycle_colours(n: int) -> int:
    return cycles.orthogonal_colouring_cycle(n)[0].colour_count


def cmd_table(args) -> int:
    if args.family != "cycle":
        raise InputError(f"table supports --family cycle only, got {args.family}")
    if args.n_max < 3:
        raise InputError(f"--n-max must be >= 3, got {args.n_max}")
    rows = ["n,constructed,oracle,agree"]
    for n in range(3, args.n_max + 1):
        built = _constructed_cycle_colours(n)
        if args.no_oracle or n > args.oracle_max:
            rows.append(f"{n},{built},,")
            continue
        try:
            exact = exact_orthochromatic(cycle(n), 2, SearchConfig(k=2, node_limit=args.budget))
        except BudgetExceededError:
            rows.append(f"{n},{built},,")
            continue
        rows.append(f"{n},{built},{exact},{str(built == exact).lower()}")
    _emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthocolour", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a graph as JSON or DOT")
    p.add_argument("family", choices=["cycle", "circulant", "complete", "hamming", "paley", "product", "complement"])
    _add_family_args(p)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("colour", help="construct a verified k-orthogonal colouring")
    p.add_argument("family", choices=sorted(COLOURERS))
    _add_family_args(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--on-paley", action="store_true", help="move Paley colourings onto QR(q) itself")
    p.add_argument("--oracle-fallback", action="store_true", help="try the exact solver when no theorem applies")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--out")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("verify", help="check a colouring file against a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact search on a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--t", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--stats", action="store_true", help="include node counts")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", help="CSV of constructed vs exact colour counts")
    p.add_argument("--family", default="cycle")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--oracle-max", type=int, default=12)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoConstructionError as exc:
        print(f"no construction: {exc}", file=sys.stderr)
        return EXIT_NO_CONSTRUCTION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
