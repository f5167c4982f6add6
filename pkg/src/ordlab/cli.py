"""Command-line front end.  Every command reads and writes JSON.

Exit codes: 0 success, 2 unreadable or malformed input, 3 a domain
precondition failed, 4 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .groups import (
    GroupError,
    LexGroupOrder,
    conjugate,
    conjugate_lex_order,
    conjugation_matrix,
    default_lex_order,
    element_from_json,
    group_from_json,
    group_of,
    lex_classify_level,
    lex_order_from_json,
    lex_order_to_json,
    lex_orders_equal,
)
from .intlinear import (
    DependentGenerators,
    LnMatrix,
    NotInSublattice,
    NotUnimodular,
    UnimodularMatrix,
)
from .orders import SCHEMA, LatticeOrder, OrderError, act, classify_level, orders_equal
from .probes import (
    FlippedOrder,
    NeighborhoodSpec,
    ProbeError,
    VerificationFailure,
    axiom_check,
    condensation_certificate,
    condensation_sequence,
    lift_and_condense,
    ln_smoothness_probe,
    n_default_order,
    orbit_enumerate,
)
from .scalars import BasisMismatch, RadicandList, coerce_vector

DOMAIN_ERRORS = (OrderError, ProbeError, GroupError, NotUnimodular, NotInSublattice,
                 DependentGenerators, BasisMismatch)


class SchemaError(ValueError):
    pass


class Failed(Exception):
    """Verification failed; carries the report to print."""

    def __init__(self, doc):
        super().__init__("verification failed")
        self.doc = doc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError(f"{self.prog}: {message}")


def dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load(text: str):
    """Inline JSON, or a path to a JSON file."""
    stripped = text.strip()
    if stripped[:1] in "[{\"" or stripped[:1].isdigit() or stripped[:1] == "-":
        source = stripped
    else:
        try:
            source = Path(text).read_text()
        except OSError as exc:
            raise SchemaError(f"cannot read {text}: {exc.strerror}") from exc
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc


def _schema(fn, *args):
    try:
        return fn(*args)
    except DOMAIN_ERRORS:
        raise
    except (KeyError, TypeError, IndexError, ValueError, AttributeError) as exc:
        raise SchemaError(f"invalid document: {exc!r}") from exc


def _check_tag(doc):
    if isinstance(doc, dict) and "schema" in doc and doc["schema"] != SCHEMA:
        raise SchemaError(f"unsupported schema {doc['schema']!r}")


def parse_lattice_order(doc, radicands=None) -> LatticeOrder:
    _check_tag(doc)
    if not isinstance(doc, dict) or "vectors" not in doc or "rank" not in doc:
        raise SchemaError("order document needs 'rank' and 'vectors'")
    if radicands is not None and "radicands" not in doc:
        doc = dict(doc, radicands=list(radicands))
    return _schema(LatticeOrder.from_json, doc)


def parse_order(doc, radicands=None):
    """A lattice order, or a lexicographic group order (``factors`` or
    ``kernel`` plus ``group``)."""
    if isinstance(doc, dict) and "group" in doc:
        _check_tag(doc)
        if "factors" in doc:
            return _schema(lex_order_from_json, doc)
        group = _schema(group_from_json, doc["group"])
        kernel = parse_lattice_order(doc["kernel"], radicands) if "kernel" in doc else None
        return default_lex_order(group, kernel)
    return parse_lattice_order(doc, radicands)


def parse_element(doc):
    if not isinstance(doc, dict):
        raise SchemaError("group element document must be an object")
    return _schema(element_from_json, doc)


def parse_vector(doc, n: int):
    if not isinstance(doc, list) or not all(isinstance(x, (int, str)) for x in doc):
        raise SchemaError("vector must be a list of integers")
    w = _schema(lambda: tuple(int(x) for x in doc))
    if len(w) != n:
        raise SchemaError(f"vector of length {len(w)} for rank {n}")
    return w


def parse_matrix(doc):
    if isinstance(doc, dict) and "ln" in doc:
        return _schema(lambda: LnMatrix(tuple(int(x) for x in doc["ln"])))
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise SchemaError("matrix must be a list of rows or {'ln': [...]}")
    rows = _schema(lambda: [[int(x) for x in r] for r in doc])
    if any(len(r) != len(rows) for r in rows):
        raise SchemaError("matrix must be square")
    return UnimodularMatrix(rows)


def order_doc(O) -> dict:
    return O.to_json() if isinstance(O, LatticeOrder) else lex_order_to_json(O)


def tagged(doc: dict) -> dict:
    return {"schema": SCHEMA, **doc}


# --- commands ---------------------------------------------------------------------


def cmd_classify(args):
    O = parse_order(load(args.order), args.radicands)
    target = load(args.point)
    if isinstance(O, LatticeOrder):
        verdict, level = classify_level(O, parse_vector(target, O.n))
    else:
        verdict, level = lex_classify_level(O, parse_element(target))
    return tagged({"verdict": verdict.value, "level": level})


def cmd_act(args):
    P = parse_lattice_order(load(args.order), args.radicands)
    A = parse_matrix(load(args.matrix))
    return act(P, A).to_json()


def cmd_equal(args):
    P = parse_order(load(args.first), args.radicands)
    Q = parse_order(load(args.second), args.radicands)
    if type(P) is not type(Q):
        raise SchemaError("cannot compare a lattice order with a group order")
    same = orders_equal(P, Q) if isinstance(P, LatticeOrder) else lex_orders_equal(P, Q)
    return tagged({"equal": same})


def cmd_probe_discrete(args):
    P = parse_lattice_order(load(args.order), args.radicands)
    cert = ln_smoothness_probe(P, verify_box=args.verify_box)
    doc = cert.to_json()
    if not cert.verified:
        raise Failed(doc)
    return doc


def _epsilon(text):
    if text is None:
        return None
    if text in ("inf", "infinity"):
        return math.inf
    try:
        return Fraction(text)
    except ValueError as exc:
        raise SchemaError(f"bad epsilon {text!r}") from exc


def cmd_probe_condense(args):
    if args.lift is not None:
        return tagged({"samples": [lift_and_condense(args.lift, radius=args.radius).to_json()]})
    if args.vector is not None:
        raw = load(args.vector)
        if not isinstance(raw, list):
            raise SchemaError("vector must be a list of scalars")
        basis = RadicandList(tuple(args.radicands or ()))
        v = _schema(coerce_vector, raw, basis)
        U = NeighborhoodSpec([parse_vector(u, len(v)) for u in load(args.neighborhood)]) \
            if args.neighborhood else NeighborhoodSpec([])
        sample = condensation_certificate(v, args.n, args.m, U, _epsilon(args.epsilon))
        return tagged({"samples": [sample.to_json()]})
    O = parse_order(load(args.order), args.radicands) if args.order else n_default_order()
    if not isinstance(O, LexGroupOrder):
        raise ProbeError("condensation sequences need an order on the group N")
    samples = condensation_sequence(O, args.count)
    return tagged({"samples": [s.to_json() for s in samples]})


def cmd_orbit(args):
    O = parse_order(load(args.order), args.radicands)
    if not isinstance(O, LexGroupOrder):
        raise ProbeError("orbits are taken for group orders")
    orbit = orbit_enumerate(O, args.radius, args.generators)
    return tagged({
        "count": len(orbit),
        "pairwise_distinct": True,
        "radius": args.radius,
        "generators": args.generators,
        "orders": [order_doc(Q) for Q in orbit],
    })


def cmd_axioms(args):
    O = parse_order(load(args.order), args.radicands)
    if args.flip is not None:
        point = load(args.flip)
        point = parse_vector(point, O.n) if isinstance(O, LatticeOrder) else parse_element(point)
        O = FlippedOrder(O, point)
    report = axiom_check(O, args.radius, args.generators).to_json()
    if not report["ok"]:
        raise Failed(report)
    return report


def cmd_group_mul(args):
    g = parse_element(load(args.left))
    h = parse_element(load(args.right))
    if group_of(g) != group_of(h):
        raise GroupError("elements of different groups")
    return tagged({"product": (g * h).to_json()})


def cmd_group_conj(args):
    g = parse_element(load(args.conjugator))
    if args.order:
        O = parse_order(load(args.order), args.radicands)
        if not isinstance(O, LexGroupOrder):
            raise ProbeError("conjugation acts on group orders")
        return tagged({"order": order_doc(conjugate_lex_order(O, g))})
    h = parse_element(load(args.element))
    if group_of(g) != group_of(h):
        raise GroupError("elements of different groups")
    doc = {"conjugate": conjugate(g, h).to_json()}
    group = group_of(g)
    if not hasattr(group, "core"):
        doc["representation"] = [list(r) for r in conjugation_matrix(group, g).rows]
    return tagged(doc)


def _radicands(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad radicand list {text!r}") from exc


def _generators(text):
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ordlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"ordlab {__version__}")
    p.add_argument("--radicands", type=_radicands, default=None,
                   help="comma separated radicands for documents that omit them")
    p.add_argument("--out", default=None, help="write the result here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="sign of a vector or group element")
    c.add_argument("order")
    c.add_argument("point")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("act", help="transport a lattice order by a unimodular matrix")
    c.add_argument("order")
    c.add_argument("matrix")
    c.set_defaults(func=cmd_act)

    c = sub.add_parser("equal", help="exact equality of two orders")
    c.add_argument("first")
    c.add_argument("second")
    c.set_defaults(func=cmd_equal)

    probe = sub.add_parser("probe", help="certificates").add_subparsers(dest="kind", required=True)
    c = probe.add_parser("discrete", help="witnesses isolating an order in its L_n orbit")
    c.add_argument("order")
    c.add_argument("--verify-box", type=int, default=3)
    c.set_defaults(func=cmd_probe_discrete)
    c = probe.add_parser("condense", help="conjugators approaching an order of N")
    c.add_argument("order", nargs="?", default=None)
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--vector", default=None, help="functional on Z^3 for a single certificate")
    c.add_argument("--neighborhood", default=None, help="list of points to keep positive")
    c.add_argument("--epsilon", default=None)
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--m", type=int, default=1)
    c.add_argument("--lift", type=int, default=None, metavar="K", help="sample on N_K instead")
    c.add_argument("--radius", type=int, default=2)
    c.set_defaults(func=cmd_probe_condense)

    c = sub.add_parser("orbit", help="distinct conjugates over a word ball")
    c.add_argument("order")
    c.add_argument("--radius", type=int, default=1)
    c.add_argument("--generators", type=_generators, default=None)
    c.set_defaults(func=cmd_orbit)

    c = sub.add_parser("axioms", help="trichotomy and closure on a ball")
    c.add_argument("order")
    c.add_argument("--radius", type=int, default=3)
    c.add_argument("--generators", type=_generators, default=None)
    c.add_argument("--flip", default=None, help="negate the verdict at this point (control)")
    c.set_defaults(func=cmd_axioms)

    group = sub.add_parser("group", help="group arithmetic").add_subparsers(dest="op", required=True)
    c = group.add_parser("mul")
    c.add_argument("left")
    c.add_argument("right")
    c.set_defaults(func=cmd_group_mul)
    c = group.add_parser("conj", help="g^-1 h g, or the conjugate of an order")
    c.add_argument("conjugator")
    c.add_argument("element", nargs="?", default=None)
    c.add_argument("--order", default=None)
    c.set_defaults(func=cmd_group_conj)
    return p


def _error(code: int, kind: str, message: str) -> int:
    sys.stderr.write(dump({"schema": SCHEMA, "error": kind, "message": message}))
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SchemaError as exc:
        return _error(2, "schema", str(exc))
    except SystemExit as exc:
        return 2 if exc.code else 0
    if getattr(args, "element", None) is None and getattr(args, "op", None) == "conj" \
            and args.order is None:
        return _error(2, "schema", "group conj needs an element or --order")
    try:
        doc = args.func(args)
        code = 0
    except SchemaError as exc:
        return _error(2, "schema", str(exc))
    except DOMAIN_ERRORS as exc:
        return _error(3, "domain", f"{type(exc).__name__}: {exc}")
    except VerificationFailure as exc:
        return _error(4, "verification", str(exc))
    except Failed as exc:
        doc, code = exc.doc, 4
    text = dump(doc)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
