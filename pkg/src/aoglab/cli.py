"""Command-line entry point: ``aoglab <subcommand> ...``.

Exit status: 0 success, 1 verification failure or refusal, 2 invalid
parameters, 3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from aoglab import coloring, domination, graph, hamiltonian, planarity
from aoglab.errors import ConstructionFailed, InvalidInputError, SizeGuardError
from aoglab.guard import CHROMATIC_ORACLE_MAX, DOMINATION_ORACLE_MAX
from aoglab.words import AOParams, parse_word, render_word

log = logging.getLogger("aoglab")

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_SIZE = 0, 1, 2, 3


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, required=True, help="word length")
    p.add_argument("--d", type=int, required=True, help="alphabet size")
    p.add_argument("--s", type=int, required=True, help="shift; tag length is k - s")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, help="write output here instead of stdout")
    p.add_argument("--force", action="store_true", help="ignore vertex-count guards")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aoglab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="materialize G(k,d,s) and export it")
    _add_params(p)
    p.add_argument("--format", choices=graph.EXPORT_FORMATS, default="json")
    _add_common(p)

    p = sub.add_parser("hamilton", help="construct a Hamiltonian cycle")
    _add_params(p)
    p.add_argument("--method", choices=("insertion", "eulerian"), default="insertion")
    p.add_argument("--format", choices=("json", "text", "debruijn"), default="json")
    _add_common(p)

    p = sub.add_parser("grid-ham", help="Hamiltonian cycle of the grid {1..d}^dim")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    _add_common(p)

    p = sub.add_parser("color", help="construct a proper colouring")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--k", type=int)
    target.add_argument("--matrix", type=int, metavar="N", help="AO matrix graph of order N")
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=int)
    p.add_argument(
        "--method", choices=("theorem3", "theorem4", "recursive", "oracle"), default="recursive"
    )
    p.add_argument("--format", choices=("json", "summary"), default="json")
    _add_common(p)

    p = sub.add_parser("chromatic", help="chromatic number report")
    _add_params(p)
    p.add_argument("--oracle", action="store_true", help="run the exact branch-and-bound oracle")
    _add_common(p)

    p = sub.add_parser("dominate", help="construct a dominating set")
    _add_params(p)
    p.add_argument("--anchor", help="word of length s appended to every tag (default all-a)")
    p.add_argument("--oracle", action="store_true", help="also compute the exact domination number")
    _add_common(p)

    p = sub.add_parser("planarity", help="planarity verdict with certificate")
    _add_params(p)
    _add_common(p)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("what", choices=("cycle", "coloring", "dominating", "witness"))
    p.add_argument("--input", type=Path, required=True)
    _add_common(p)
    return parser


def _params(args) -> AOParams:
    return AOParams(args.k, args.d, args.s)


def _cap(args, default=None):
    if args.force:
        log.warning("size guard disabled by --force")
        return -1
    return default


def _cmd_build(args) -> tuple[int, str]:
    g = graph.materialize(_params(args), cap=_cap(args))
    return EXIT_OK, graph.export(g, args.format).decode()


def _cmd_hamilton(args) -> tuple[int, str]:
    p = _params(args)
    build = (
        hamiltonian.insertion_hamiltonian
        if args.method == "insertion"
        else hamiltonian.eulerian_hamiltonian
    )
    c = build(p, cap=_cap(args))
    if args.format == "text":
        return EXIT_OK, hamiltonian.cycle_to_text(c)
    if args.format == "debruijn":
        return EXIT_OK, hamiltonian.de_bruijn_string(c) + "\n"
    return EXIT_OK, hamiltonian.cycle_to_json(c)


def _cmd_grid(args) -> tuple[int, str]:
    result = hamiltonian.grid_hamiltonian(hamiltonian.GridParams(args.d, args.dim), cap=_cap(args))
    if isinstance(result, hamiltonian.ParityRefusal):
        doc = {
            "schema": hamiltonian.SCHEMA_VERSION,
            "kind": "grid",
            "params": result.params.as_dict(),
            "refusal": result.reason,
        }
        return EXIT_FAILED, json.dumps(doc, indent=1) + "\n"
    if args.format == "text":
        return EXIT_OK, hamiltonian.cycle_to_text(result)
    return EXIT_OK, hamiltonian.cycle_to_json(result)


def _cmd_color(args) -> tuple[int, str]:
    if args.matrix is not None:
        g = graph.ao_matrix_graph(args.matrix)
        if args.method == "oracle":
            _, colors = coloring.exact_coloring(g, cap=_cap(args, CHROMATIC_ORACLE_MAX))
            c = coloring.explicit_coloring(g, colors)
        else:
            c = coloring.ao_matrix_coloring(args.matrix)
    else:
        if args.d is None or args.s is None:
            raise InvalidInputError("--k needs --d and --s")
        p = _params(args)
        if args.method == "oracle":
            g = graph.materialize(p)
            _, colors = coloring.exact_coloring(g, cap=_cap(args, CHROMATIC_ORACLE_MAX))
            c = coloring.Coloring(dict(zip(g.vertices, colors)), max(colors) + 1, params=p)
        else:
            build = {
                "theorem3": coloring.theorem3_coloring,
                "theorem4": coloring.theorem4_coloring,
                "recursive": coloring.recursive_coloring,
            }[args.method]
            c = build(p, cap=_cap(args))
    verdict = coloring.verify_coloring(c, cap=_cap(args))
    if not verdict:
        raise ConstructionFailed(verdict.message)
    if args.format == "summary":
        lines = [f"palette {c.palette}"]
        lines += [f"color {col}: {n}" for col, n in c.class_sizes().items()]
        return EXIT_OK, "\n".join(lines) + "\n"
    return EXIT_OK, coloring.coloring_to_json(c)


def _cmd_chromatic(args) -> tuple[int, str]:
    p = _params(args)
    report = coloring.chromatic_report(
        p, use_oracle=args.oracle, oracle_cap=_cap(args, CHROMATIC_ORACLE_MAX)
    )
    doc = {"schema": 1, "params": p.as_dict(), **report.as_dict()}
    return EXIT_OK, json.dumps(doc, indent=1) + "\n"


def _cmd_dominate(args) -> tuple[int, str]:
    p = _params(args)
    anchor = parse_word(args.anchor, p.d, p.s) if args.anchor else None
    ds = domination.dominating_set_construct(p, anchor)
    verdict = domination.verify_dominating(ds, cap=_cap(args))
    if not verdict:
        raise ConstructionFailed(verdict.message)
    doc = json.loads(domination.dominating_to_json(ds))
    if args.oracle:
        g = graph.materialize(p, cap=_cap(args))
        best = domination.minimum_dominating_set(g, cap=_cap(args, DOMINATION_ORACLE_MAX))
        doc["oracle"] = {"gamma": len(best), "members": [g.label(i) for i in best]}
    return EXIT_OK, json.dumps(doc, indent=1) + "\n"


def _cmd_planarity(args) -> tuple[int, str]:
    return EXIT_OK, planarity.verdict_to_json(planarity.classify_planarity(_params(args)))


def _cmd_verify(args) -> tuple[int, str]:
    data = args.input.read_text()
    if args.what == "cycle":
        verdict = hamiltonian.verify_cycle(hamiltonian.cycle_from_json(data))
    elif args.what == "coloring":
        verdict = coloring.verify_coloring(coloring.coloring_from_json(data), cap=_cap(args))
    elif args.what == "dominating":
        ds = domination.dominating_from_json(data)
        verdict = domination.verify_dominating(ds, cap=_cap(args))
    else:
        verdict = planarity.verify_witness(planarity.witness_from_json(data))
    status = "accept" if verdict else "reject"
    doc = {"schema": 1, "kind": args.what, "verdict": status, "message": verdict.message}
    return (EXIT_OK if verdict else EXIT_FAILED), json.dumps(doc, indent=1) + "\n"


COMMANDS = {
    "build": _cmd_build,
    "hamilton": _cmd_hamilton,
    "grid-ham": _cmd_grid,
    "color": _cmd_color,
    "chromatic": _cmd_chromatic,
    "dominate": _cmd_dominate,
    "planarity": _cmd_planarity,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        code, text = COMMANDS[args.command](args)
    except InvalidInputError as exc:
        print(f"aoglab: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SizeGuardError as exc:
        print(f"aoglab: {exc} (use --force or AOGLAB_MAX_VERTICES)", file=sys.stderr)
        return EXIT_SIZE
    except ConstructionFailed as exc:
        print(f"aoglab: construction failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as exc:
        print(f"aoglab: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out is not None:
        args.out.write_text(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="aoglab: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
