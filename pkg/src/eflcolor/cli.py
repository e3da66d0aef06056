"""Command-line front end.

Subcommands: validate, color, verify, chi, convert, sweep, generate.
Exit codes are a stable contract for scripting:

* 0 success
* 1 semantic failure (invalid instance, improper coloring, violated bound)
* 2 input error (unreadable file, parse error, index mismatch, bad usage)
* 3 no arithmetic certificate / conversion impossible
* 4 search budget exceeded

Every command accepts ``--json`` to emit the same report as a JSON document.
Output is deterministic: identical inputs and seeds give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import files
from .arithmetic import DEFAULT_NODE_BUDGET, find_certificate, search_labeling
from .coloring import color_decomposition, explain_element
from .errors import (
    BudgetExceededError,
    ParseError,
    UnknownFixtureError,
    ValidationError,
    VertexInOneElementError,
)
from .fixtures import fixture
from .model import check_proper
from .oracle import enumerate_decompositions, exact_chromatic_index
from .hypergraph import (
    decomposition_to_quasicluster,
    quasicluster_to_decomposition,
)

SWEEP_EXHAUSTIVE_LIMIT = 5


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report, text, code = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print("invalid input:", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text:
            print(line)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eflcolor",
        description="validate, color and analyze clique decompositions of K_n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("path")
    p.add_argument("--hypergraph", action="store_true", help="treat input as a hypergraph file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("color", help="find a certificate and color the instance")
    p.add_argument("path")
    p.add_argument("--labeling", choices=("given", "search"), default="given")
    p.add_argument("--explain", action="store_true", help="append per-element derivations")
    p.add_argument("--out", help="write the coloring file here instead of stdout")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against an instance")
    p.add_argument("instance")
    p.add_argument("coloring")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("chi", help="exact chromatic index with witness")
    p.add_argument("path")
    p.add_argument("--budget", type=int, default=5_000_000)
    p.add_argument("--out", help="write the witness coloring file here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_chi)

    p = sub.add_parser("convert", help="switch between instance and hypergraph files")
    p.add_argument("path")
    p.add_argument("--to", choices=("decomposition", "hypergraph"), required=True)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_convert)

    p = sub.add_parser("sweep", help="bound check over many instances")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--count", type=int, default=20, help="instances per n in random mode")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=200_000, help="labeling-search node budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("generate", help="write a named fixture instance")
    p.add_argument("name")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_generate)

    return parser


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_or_print(text_out: str, out: str | None, lines: list[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text_out)
    else:
        lines.extend(text_out.rstrip("\n").split("\n"))


def _cmd_validate(args):
    text = _read(args.path)
    if args.hypergraph:
        try:
            names, h = files.parse_hypergraph(text)
        except ValidationError as exc:
            return _invalid_report(exc)
        report = {
            "command": "validate",
            "ok": True,
            "kind": "hypergraph",
            "edges": h.n,
            "vertices": len(h.vertices()),
            "violations": [],
        }
        lines = [f"valid hypergraph edges {h.n} vertices {len(h.vertices())}"]
        return report, lines, 0
    try:
        d = files.parse_instance(text)
    except ValidationError as exc:
        return _invalid_report(exc)
    report = {
        "command": "validate",
        "ok": True,
        "kind": "decomposition",
        "n": d.n,
        "elements": len(d.elements),
        "violations": [],
    }
    lines = [f"valid n {d.n} elements {len(d.elements)}"]
    return report, lines, 0


def _invalid_report(exc: ValidationError):
    violations = [str(v) for v in exc.violations]
    report = {"command": "validate", "ok": False, "violations": violations}
    return report, ["invalid"] + violations, 1


def _cmd_color(args):
    d = files.parse_instance(_read(args.path))
    labeling_pairs = None
    if args.labeling == "given":
        cert = find_certificate(d)
    else:
        abstract = [elem.vertices for elem in d.elements]
        found = search_labeling(d.n, abstract, budget=args.budget)
        if found is None:
            cert = None
        else:
            labeling, cert = found
            labeling_pairs = labeling.assignment
            from .arithmetic import apply_labeling

            d = apply_labeling(d.n, abstract, labeling)
    if cert is None:
        report = {"command": "color", "ok": False, "reason": "no certificate"}
        return report, ["no certificate"], 3
    colored = color_decomposition(d, cert)
    comments = []
    if labeling_pairs is not None:
        comments.append(
            "labeling "
            + " ".join(f"{v}->{x}" for v, x in labeling_pairs)
        )
    if args.explain:
        comments.extend(
            explain_element(i, entry) for i, entry in enumerate(cert.entries)
        )
    out_text = files.serialize_coloring(
        colored.coloring, colored.colors_used, tuple(comments)
    )
    report = {
        "command": "color",
        "ok": True,
        "colors_used": colored.colors_used,
        "coloring": list(colored.coloring),
        "centrals": [list(pair) for pair in cert.centrals],
        "certificate": [
            {
                "index": i,
                "kind": entry.kind,
                "step": entry.step,
                "central": entry.central,
            }
            for i, entry in enumerate(cert.entries)
        ],
        "labeling": (
            None
            if labeling_pairs is None
            else {str(v): x for v, x in labeling_pairs}
        ),
        "explain": comments if args.explain else [],
    }
    lines: list[str] = []
    _write_or_print(out_text, args.out, lines)
    if args.out:
        lines.append(f"wrote {args.out}")
    return report, lines, 0


def _cmd_verify(args):
    d = files.parse_instance(_read(args.instance))
    doc = files.parse_coloring(_read(args.coloring))
    if sorted(doc.assignment) != list(range(len(d.elements))):
        raise ParseError(1, 1, "coloring does not match the instance's element indices")
    coloring = [doc.assignment[i] for i in range(len(d.elements))]
    verdict = check_proper(d, coloring)
    report = {
        "command": "verify",
        "ok": verdict.ok,
        "colors_used": verdict.colors_used,
        "conflicts": [list(c) for c in verdict.conflicts],
    }
    if verdict.ok:
        return report, [f"proper colors-used {verdict.colors_used}"], 0
    lines = [f"improper conflicts {len(verdict.conflicts)}"]
    lines.extend(f"conflict {i} {j} at vertex {v}" for i, j, v in verdict.conflicts)
    return report, lines, 1


def _cmd_chi(args):
    d = files.parse_instance(_read(args.path))
    result = exact_chromatic_index(d, budget=args.budget)
    cert = find_certificate(d)
    theorem_colors = None
    if cert is not None:
        theorem_colors = color_decomposition(d, cert).colors_used
    comments = [
        f"chi {result.chi}",
        f"n {d.n}",
        f"within-n {str(result.chi <= d.n).lower()}",
    ]
    if theorem_colors is not None:
        comments.append(f"certificate-colors {theorem_colors}")
    out_text = files.serialize_coloring(result.witness, result.chi, tuple(comments))
    report = {
        "command": "chi",
        "chi": result.chi,
        "n": d.n,
        "within_n": result.chi <= d.n,
        "certificate_colors": theorem_colors,
        "witness": list(result.witness),
        "nodes_explored": result.nodes_explored,
    }
    lines: list[str] = []
    _write_or_print(out_text, args.out, lines)
    if args.out:
        lines.append(f"wrote {args.out}")
    return report, lines, 0


def _cmd_convert(args):
    if args.to == "hypergraph":
        d = files.parse_instance(_read(args.path))
        try:
            h, corr = decomposition_to_quasicluster(d)
        except VertexInOneElementError as exc:
            report = {"command": "convert", "ok": False, "reason": str(exc)}
            return report, [f"cannot convert: {exc}"], 3
        pairs = " ".join(
            f"{i}->{corr.element_to_vertex[i]}" for i in range(len(d.elements))
        )
        out_text = files.serialize_hypergraph(
            h, comments=(f"element->vertex {pairs}",)
        )
    else:
        names, h = files.parse_hypergraph(_read(args.path))
        d, corr = quasicluster_to_decomposition(h)
        pairs = " ".join(
            f"{corr.element_to_vertex[i]}->{i}" for i in range(len(d.elements))
        )
        out_text = files.serialize_instance(d, comments=(f"vertex->element {pairs}",))
    report = {"command": "convert", "ok": True, "to": args.to, "text": out_text}
    lines: list[str] = []
    _write_or_print(out_text, args.out, lines)
    if args.out:
        lines.append(f"wrote {args.out}")
    return report, lines, 0


def _sweep_instances(args):
    if args.mode == "exhaustive":
        if args.n_max > SWEEP_EXHAUSTIVE_LIMIT:
            raise ParseError(1, 1, f"exhaustive sweeps stop at n={SWEEP_EXHAUSTIVE_LIMIT}")
        for n in range(2, args.n_max + 1):
            for idx, d in enumerate(enumerate_decompositions(n)):
                yield n, idx, d
    else:
        from .fixtures import random_decomposition

        for n in range(2, args.n_max + 1):
            for idx in range(args.count):
                yield n, idx, random_decomposition(n, args.seed + idx)


def _cmd_sweep(args):
    from .arithmetic import apply_labeling

    rows = []
    lines = [f"sweep mode {args.mode} n-max {args.n_max}"]
    violated = 0
    timeouts = 0
    arithmetic = 0
    total = 0
    for n, idx, d in _sweep_instances(args):
        total += 1
        try:
            chi = exact_chromatic_index(d).chi
        except BudgetExceededError:
            chi = None
            timeouts += 1
        cert = find_certificate(d)
        theorem_colors = None
        if cert is not None:
            arith = "yes"
            theorem_colors = color_decomposition(d, cert).colors_used
        else:
            abstract = [elem.vertices for elem in d.elements]
            try:
                found = search_labeling(d.n, abstract, budget=args.budget)
            except BudgetExceededError:
                arith = "unknown"
            else:
                if found is None:
                    arith = "no"
                else:
                    arith = "yes"
                    labeling, cert2 = found
                    relabeled = apply_labeling(d.n, abstract, labeling)
                    theorem_colors = color_decomposition(relabeled, cert2).colors_used
        if chi is not None and chi > d.n:
            violated += 1
        if arith == "yes":
            arithmetic += 1
        rows.append(
            {
                "n": n,
                "index": idx,
                "elements": len(d.elements),
                "chi": chi,
                "arithmetic": arith,
                "certificate_colors": theorem_colors,
            }
        )
        tc = "-" if theorem_colors is None else str(theorem_colors)
        chi_text = "timeout" if chi is None else str(chi)
        lines.append(
            f"instance n={n} idx={idx} elements={len(d.elements)}"
            f" chi={chi_text} arithmetic={arith} certificate-colors={tc}"
        )
    lines.append(
        f"summary instances {total} chi-le-n {total - violated - timeouts}/{total}"
        f" arithmetic {arithmetic}/{total} timeouts {timeouts}"
    )
    report = {
        "command": "sweep",
        "mode": args.mode,
        "n_max": args.n_max,
        "instances": rows,
        "bound_holds": violated == 0,
        "timeouts": timeouts,
        "arithmetic_fraction": [arithmetic, total],
    }
    return report, lines, 0 if violated == 0 else 1


def _cmd_generate(args):
    try:
        d = fixture(args.name, n=args.n, seed=args.seed)
    except UnknownFixtureError:
        print(f"error: unknown fixture {args.name!r}", file=sys.stderr)
        return {"command": "generate", "ok": False}, [], 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return {"command": "generate", "ok": False}, [], 2
    out_text = files.serialize_instance(d)
    report = {
        "command": "generate",
        "ok": True,
        "name": args.name,
        "n": d.n,
        "elements": len(d.elements),
        "text": out_text,
    }
    lines: list[str] = []
    _write_or_print(out_text, args.out, lines)
    if args.out:
        lines.append(f"wrote {args.out}")
    return report, lines, 0


if __name__ == "__main__":
    sys.exit(main())
