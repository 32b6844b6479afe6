"""``liecoho`` command line.

Algebras travel between commands as JSON documents on stdin/stdout, so
``liecoho family L n=6 | liecoho complete`` works. Exit status: 0 success,
1 check failure, 2 usage error, 3 input parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import report as report_mod
from .algebra import characteristic_sequence_at, is_filiform, is_nilpotent, jacobi_check
from .cohomology import cohomology_dims
from .derivations import derivation_basis, diagonal_torus, inner_basis, is_complete, rank_certificate
from .families import FamilyError, JacobiError, build_family, semidirect
from .io import (
    ParseError,
    algebra_to_document,
    dumps,
    normalize_lambda,
    parse_algebra,
    parse_family_spec,
    serialize_algebra,
    vector_to_strings,
)
from .linalg import format_rational, parse_rational, unit_vector

OK, CHECK_FAILED, USAGE, PARSE = 0, 1, 2, 3


class UsageError(Exception):
    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self.format_usage())

    def exit(self, status=0, message=None):
        # reached after --help has printed, or on a fatal parse problem
        if status:
            raise UsageError(message or "", self.format_usage())
        raise _HelpRequested()


class _HelpRequested(Exception):
    pass


def _io_flags(p: argparse.ArgumentParser, algebra_input: bool = True) -> None:
    if algebra_input:
        p.add_argument("--input", metavar="FILE", help="algebra document (default: stdin)")
        p.add_argument("--skip-jacobi", action="store_true", help="do not verify the Jacobi identity on input")
    p.add_argument("--output", metavar="FILE", help="write here instead of stdout")
    p.add_argument("--format", choices=("json", "table"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="liecoho", description="Exact cohomology, derivations and completeness of Lie algebras.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("jacobi", help="check the Jacobi identity")
    _io_flags(p)
    p = sub.add_parser("cohomology", help="dimensions of C^p, Z^p, B^p, H^p with adjoint coefficients")
    p.add_argument("--p", type=int, required=True, metavar="P")
    _io_flags(p)
    p = sub.add_parser("derivations", help="basis of Der(g) and of the inner derivations")
    _io_flags(p)
    p = sub.add_parser("rank", help="diagonal torus certificate of a nilpotent algebra")
    _io_flags(p)
    p = sub.add_parser("complete", help="decide H^0 = H^1 = 0")
    _io_flags(p)
    p = sub.add_parser("family", help="build a family member, e.g. 'A n=10 k=4 lambda=1,0'")
    p.add_argument("spec", nargs="+")
    p.add_argument("--normalize-lambda", action="store_true", help="scale lambda so its first nonzero entry is 1")
    _io_flags(p, algebra_input=False)
    p = sub.add_parser("semidirect", help="extend a nilpotent algebra by its diagonal torus")
    _io_flags(p)
    p = sub.add_parser("char-seq", help="Jordan type of ad(y) and the filiform test")
    p.add_argument("--at", metavar="VECTOR", help="comma-separated coordinates of y (default: Y1)")
    _io_flags(p)
    p = sub.add_parser("reproduce-paper", help="run the full reproduction suite")
    p.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    p.add_argument("--no-stretch", action="store_true", help="skip the k = 6 rows of the H^2 suite")
    _io_flags(p, algebra_input=False)
    return parser


def _read_algebra(args, stdin_text):
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        text = sys.stdin.read() if stdin_text is None else stdin_text
    return parse_algebra(text, check_jacobi=not args.skip_jacobi)


def _matrix_entries(m) -> list:
    return [[i + 1, j + 1, format_rational(v)] for i, j, v in m.items()]


def _table(doc) -> str:
    if isinstance(doc, dict) and "brackets" in doc and "labels" in doc:
        labels = doc["labels"]
        lines = [f"dim: {doc['dim']}"]
        for b in doc["brackets"]:
            rhs = " + ".join(f"{c}*{labels[int(k) - 1]}" if c != "1" else labels[int(k) - 1]
                             for k, c in b["coeffs"].items())
            lines.append(f"[{labels[b['i'] - 1]}, {labels[b['j'] - 1]}] = {rhs}")
        return "\n".join(lines) + "\n"
    lines = []
    for key, val in doc.items():
        lines.append(f"{key}: {val if isinstance(val, (int, str, bool)) or val is None else json.dumps(val)}")
    return "\n".join(lines) + "\n"


def _render(doc, fmt: str) -> str:
    return dumps(doc) if fmt == "json" else _table(doc)


def _cmd_jacobi(g, args):
    bad = jacobi_check(g)
    doc = {
        "jacobi": "fail" if bad else "pass",
        "violations": [{"triple": [x + 1 for x in v.triple], "residual": vector_to_strings(v.residual)} for v in bad],
    }
    return (CHECK_FAILED if bad else OK), doc


def _cmd_cohomology(g, args):
    if args.p < 0:
        raise UsageError("--p must be non-negative")
    d = cohomology_dims(g, args.p)
    return OK, {"p": d.p, "dim_C": d.dim_C, "dim_Z": d.dim_Z, "dim_B": d.dim_B, "dim_H": d.dim_H}


def _cmd_derivations(g, args):
    der = derivation_basis(g)
    inner = inner_basis(g)
    return OK, {
        "dim_der": der.dim,
        "dim_inner": inner.dim,
        "derivations": [_matrix_entries(d) for d in der.basis],
        "inner": [_matrix_entries(d) for d in inner.basis],
    }


def _cmd_rank(g, args):
    if not is_nilpotent(g):
        return CHECK_FAILED, {"error": "algebra is not nilpotent"}
    r, t = rank_certificate(g)
    return OK, {"rank": r, "weights": [vector_to_strings(w) for w in t.weight_vectors]}


def _cmd_complete(g, args):
    v = is_complete(g)
    return OK, {
        "h0": v.h0,
        "h1": v.h1,
        "complete": v.complete,
        "derivation_witness": _matrix_entries(v.derivation_witness) if v.derivation_witness else None,
        "central_witness": vector_to_strings(v.central_witness) if v.central_witness else None,
    }


def _cmd_semidirect(g, args):
    if not is_nilpotent(g):
        return CHECK_FAILED, {"error": "algebra is not nilpotent"}
    return OK, algebra_to_document(semidirect(g, diagonal_torus(g)))


def _cmd_char_seq(g, args):
    if args.at:
        try:
            y = tuple(parse_rational(x) for x in args.at.split(","))
        except ValueError as exc:
            raise UsageError(f"--at: {exc}") from None
        if len(y) != g.dim:
            raise UsageError(f"--at needs {g.dim} coordinates")
    else:
        y = unit_vector(g.dim, 0)
    try:
        seq = list(characteristic_sequence_at(g, y).parts)
    except ValueError as exc:
        return CHECK_FAILED, {"error": str(exc)}
    filiform, witness = is_filiform(g)
    return OK, {
        "at": vector_to_strings(y),
        "sequence": seq,
        "filiform": filiform,
        "filiform_witness": vector_to_strings(witness) if witness else None,
    }


_ALGEBRA_COMMANDS = {
    "jacobi": _cmd_jacobi,
    "cohomology": _cmd_cohomology,
    "derivations": _cmd_derivations,
    "rank": _cmd_rank,
    "complete": _cmd_complete,
    "semidirect": _cmd_semidirect,
    "char-seq": _cmd_char_seq,
}


def _dispatch(args, stdin_text):
    if args.command == "family":
        spec = parse_family_spec(args.spec)
        if args.normalize_lambda:
            spec = normalize_lambda(spec)
        g = build_family(spec)
        text = serialize_algebra(g) if args.format == "json" else _table(algebra_to_document(g))
        return OK, text
    if args.command == "reproduce-paper":
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        rep = report_mod.build_report(jobs=args.jobs, stretch=not args.no_stretch)
        text = dumps(rep) if args.format == "json" else report_mod.report_table(rep)
        return (OK if rep["all_pass"] else CHECK_FAILED), text
    if args.command == "jacobi":
        args.skip_jacobi = True
    g = _read_algebra(args, stdin_text)
    status, doc = _ALGEBRA_COMMANDS[args.command](g, args)
    return status, _render(doc, args.format)


def run_command(argv, stdin_text: str | None = None) -> tuple[int, str]:
    """Run one command; returns the exit status and the text it would print."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        status, text = _dispatch(args, stdin_text)
    except _HelpRequested:
        return OK, ""
    except UsageError as exc:
        return USAGE, f"{exc.usage or parser.format_usage()}liecoho: error: {exc}\n"
    except JacobiError as exc:
        return PARSE, f"liecoho: {exc}\n"
    except (ParseError, FamilyError) as exc:
        return PARSE, f"liecoho: parse error: {exc}\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return status, ""
    return status, text


def main(argv=None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status in (OK, CHECK_FAILED) else sys.stderr
    stream.write(text)
    stream.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
