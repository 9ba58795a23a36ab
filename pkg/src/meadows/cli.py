"""Command-line front end.

Subcommands::

    meadow check <desc>        ring axioms + meadow verdict
    meadow invtable <desc>     inverse table with self-inverse/invertible marks
    meadow decompose <desc>    minimal idempotents, component fields, signature
    meadow classify <N>        all meadows of order N up to isomorphism
    meadow isomorphic <d> <d>  compare two meadows by signature
    meadow count <desc>        self-inverse / invertible counts, brute vs formula

Ring descriptors: ``zmod:N``, ``gf:P^K`` (P prime), ``prod:(D,D,...)`` with
at least two factors, or ``file:PATH`` pointing at a RingSpec table document.

Exit codes: 0 success, 1 domain failure (non-meadow input or a table ring
violating an axiom; the witness is printed), 2 usage, parse, or bound error.
Output is deterministic: identical invocations print identical bytes.
``--format=machine`` switches to line-oriented ``key: value`` records.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from meadows.counting import classify_order, count_report
from meadows.errors import (
    AxiomViolationError,
    CarrierBoundError,
    ConsistencyError,
    DescriptorError,
    MeadowError,
    NotAMeadowError,
    RingSpecError,
)
from meadows.meadow import Meadow, NotAMeadow, require_meadow, to_meadow
from meadows.polyfield import is_prime
from meadows.rings import (
    DEFAULT_CHECK_BOUND,
    DEFAULT_STRUCTURED_BOUND,
    DEFAULT_TABLE_BOUND,
    FiniteCommRing,
    check_axioms,
    load_ring,
    make_galois_ring,
    make_product,
    make_zmod,
    parse_ringspec,
)
from meadows.structure import decompose, signature

# Descriptor parsing.


@dataclass(frozen=True)
class Caps:
    structured: int = DEFAULT_STRUCTURED_BOUND
    table: int = DEFAULT_TABLE_BOUND
    check: int = DEFAULT_CHECK_BOUND


def parse_descriptor(text: str, caps: Caps = Caps()) -> FiniteCommRing:
    """Parse a ring descriptor; raises DescriptorError on any syntax problem."""
    ring, pos = _parse_desc(text, 0, caps)
    if pos != len(text):
        raise DescriptorError(f"trailing input at column {pos}: '{text[pos:]}'")
    return ring


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise DescriptorError(f"expected an integer at column {start} of '{text}'")
    return int(text[start:pos]), pos


def _parse_desc(text: str, pos: int, caps: Caps) -> tuple[FiniteCommRing, int]:
    try:
        if text.startswith("zmod:", pos):
            n, pos = _parse_int(text, pos + 5)
            return make_zmod(n, max_order=caps.structured), pos
        if text.startswith("gf:", pos):
            p, pos = _parse_int(text, pos + 3)
            if pos >= len(text) or text[pos] != "^":
                raise DescriptorError("expected 'gf:P^K'")
            k, pos = _parse_int(text, pos + 1)
            if not is_prime(p):
                raise DescriptorError(f"gf:{p}^{k}: {p} is not prime")
            return make_galois_ring(p, k, max_order=caps.structured), pos
        if text.startswith("prod:(", pos):
            pos += 6
            factors = []
            while True:
                ring, pos = _parse_desc(text, pos, caps)
                factors.append(ring)
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                    continue
                break
            if pos >= len(text) or text[pos] != ")":
                raise DescriptorError("unterminated 'prod:(' descriptor")
            if len(factors) < 2:
                raise DescriptorError("prod:(...) needs at least two factors")
            return make_product(factors, max_order=caps.structured), pos + 1
        if text.startswith("file:", pos):
            start = pos + 5
            end = start
            while end < len(text) and text[end] not in ",)":
                end += 1
            path = text[start:end]
            if not path:
                raise DescriptorError("empty path in 'file:' descriptor")
            try:
                body = Path(path).read_text()
            except OSError as exc:
                raise RingSpecError(f"cannot read '{path}': {exc}") from None
            spec = parse_ringspec(body)
            return load_ring(spec, max_order=caps.table, label=f"file:{path}"), end
    except ValueError as exc:
        raise DescriptorError(str(exc)) from None
    raise DescriptorError(
        f"unrecognized descriptor at column {pos} of '{text}' "
        "(expected zmod:, gf:, prod:( or file:)"
    )


# Reports.


@dataclass
class Report:
    """A command result: ordered key/value pairs plus a human rendering."""

    pairs: list[tuple[str, str]]
    human: str


def render_machine(report: Report) -> str:
    return "".join(f"{k}: {v}\n" for k, v in report.pairs)


def parse_machine(text: str) -> list[tuple[str, str]]:
    """Inverse of :func:`render_machine` (round-trips exactly)."""
    out = []
    for line in text.splitlines():
        key, sep, value = line.partition(": ")
        if not sep:
            raise ValueError(f"not a machine report line: '{line}'")
        out.append((key, value))
    return out


def _require(ring: FiniteCommRing) -> Meadow:
    return require_meadow(ring)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _ring_header(ring: FiniteCommRing) -> tuple[list[tuple[str, str]], list[str]]:
    pairs = [("ring", ring.label), ("order", str(ring.order))]
    lines = [f"ring:      {ring.label}  (order {ring.order})"]
    if ring.degenerate:
        pairs.append(("degenerate", "yes"))
        lines.append("note:      degenerate zero ring (0 = 1)")
    return pairs, lines


def cmd_check(ring: FiniteCommRing, caps: Caps) -> Report:
    head_pairs, head_lines = _ring_header(ring)
    pairs = [("command", "check"), *head_pairs]
    lines = list(head_lines)

    try:
        report = check_axioms(ring, max_order=caps.check)
    except CarrierBoundError:
        report = None
    if report is None:
        pairs.append(("axioms", "skipped"))
        lines.append(
            f"axioms:    skipped (order above exhaustive bound {caps.check})"
        )
    else:
        pairs.append(("axioms", "pass" if report.ok else "fail"))
        for c in report.axioms + report.derived:
            pairs.append((f"axiom.{c.name.strip('()')}", c.status))
            if c.witness:
                pairs.append(
                    (f"axiom.{c.name.strip('()')}.witness", c.describe_witness())
                )
        if report.ok:
            lines.append("axioms:    all pass (8 axioms, 7 derived identities)")
        else:
            lines.append("axioms:    FAIL")
            for c in report.axioms + report.derived:
                if c.status == "fail":
                    lines.append(
                        f"           {c.name} {c.law} fails at {c.describe_witness()}"
                    )

    verdict = to_meadow(ring)
    if isinstance(verdict, NotAMeadow):
        pairs.append(("meadow", "no"))
        pairs.append(("witness", str(verdict.witness)))
        lines.append(f"meadow:    no; witness: {verdict.witness}")
    else:
        pairs.append(("meadow", "yes"))
        lines.append("meadow:    yes")
    return Report(pairs, "\n".join(lines) + "\n")


def cmd_invtable(ring: FiniteCommRing, caps: Caps) -> Report:
    meadow = _require(ring)
    rep = count_report(meadow)
    self_set = set(rep.self_inverse_elements)
    unit_set = set(rep.invertible_elements)

    head_pairs, head_lines = _ring_header(ring)
    pairs = [("command", "invtable"), *head_pairs, ("signature", str(rep.signature))]
    for x in ring.elements():
        pairs.append((f"inv.{x}", str(meadow.inv(x))))
    pairs.append(("self_inverse", " ".join(str(x) for x in rep.self_inverse_elements)))
    pairs.append(("invertible", " ".join(str(x) for x in rep.invertible_elements)))

    width = max(7, len(str(ring.order - 1)))
    lines = [
        *head_lines,
        f"signature: {rep.signature}",
        f"{'element':>{width}}  {'inverse':>{width}}  self-inverse  invertible",
    ]
    for x in ring.elements():
        lines.append(
            f"{x:>{width}}  {meadow.inv(x):>{width}}  "
            f"{_yesno(x in self_set):<12}  {_yesno(x in unit_set)}"
        )
    return Report(pairs, "\n".join(lines) + "\n")


def cmd_decompose(ring: FiniteCommRing, caps: Caps) -> Report:
    meadow = _require(ring)
    dec = decompose(meadow)
    by_component = " x ".join(f"GF({p**k})" for p, k in dec.fields)
    verified = (
        "all pairs" if dec.pairwise_verified else "constants/inverse/bijection only"
    )

    head_pairs, head_lines = _ring_header(ring)
    pairs = [
        ("command", "decompose"),
        *head_pairs,
        ("minimals", " ".join(str(e) for e in dec.minimals)),
    ]
    for i, (comp, (p, k)) in enumerate(zip(dec.components, dec.fields)):
        pairs.append((f"component.{i}.idempotent", str(comp.idempotent)))
        pairs.append((f"component.{i}.order", str(comp.meadow.order)))
        pairs.append((f"component.{i}.field", f"{p}^{k}"))
        pairs.append(
            (f"component.{i}.carrier", " ".join(str(a) for a in comp.carrier))
        )
    pairs.append(("iso", by_component or "(zero ring)"))
    pairs.append(("signature", str(dec.signature)))
    pairs.append(("verified", verified))

    lines = [
        *head_lines,
        f"minimals:  [{', '.join(str(e) for e in dec.minimals)}]",
    ]
    for i, (comp, (p, k)) in enumerate(zip(dec.components, dec.fields)):
        if len(comp.carrier) <= 16:
            carrier = "{" + ", ".join(str(a) for a in comp.carrier) + "}"
        else:
            head = ", ".join(str(a) for a in comp.carrier[:8])
            carrier = f"{{{head}, ...}} ({len(comp.carrier)} elements)"
        lines.append(
            f"component {i}: idempotent {comp.idempotent}, order "
            f"{comp.meadow.order}, field GF({p**k}), carrier {carrier}"
        )
    if dec.fields:
        lines.append(f"iso:       M ≅ {by_component}  (verified: {verified})")
    else:
        lines.append("iso:       zero ring, empty decomposition")
    lines.append(f"signature: {dec.signature}")
    return Report(pairs, "\n".join(lines) + "\n")


def cmd_classify(n: int, caps: Caps) -> Report:
    rep = classify_order(n)
    pairs = [
        ("command", "classify"),
        ("order", str(n)),
        ("count", str(rep.count)),
    ]
    for i, sig in enumerate(rep.signatures):
        pairs.append((f"signature.{i}", str(sig)))
        pairs.append((f"signature.{i}.minimal", _yesno(sig == rep.minimal)))
    pairs.append(("minimal", str(rep.minimal) if rep.minimal else "none"))

    plural = "" if rep.count == 1 else "s"
    lines = [f"meadows of order {n}: {rep.count} signature{plural}"]
    for i, sig in enumerate(rep.signatures):
        mark = "  [minimal meadow]" if sig == rep.minimal else ""
        lines.append(f"  {i + 1}. {sig}{mark}")
    if rep.count > 1:
        lines.append("pairwise non-isomorphic (signatures differ)")
    if rep.minimal is None:
        lines.append(f"no minimal meadow of order {n} ({n} is not squarefree)")
    return Report(pairs, "\n".join(lines) + "\n")


def cmd_isomorphic(r1: FiniteCommRing, r2: FiniteCommRing, caps: Caps) -> Report:
    m1, m2 = _require(r1), _require(r2)
    s1, s2 = signature(m1), signature(m2)
    same = s1 == s2
    pairs = [
        ("command", "isomorphic"),
        ("left", r1.label),
        ("right", r2.label),
        ("signature.left", str(s1)),
        ("signature.right", str(s2)),
        ("isomorphic", _yesno(same)),
    ]
    if r1.degenerate or r2.degenerate:
        pairs.insert(3, ("degenerate", "yes"))
    lines = [
        f"left:       {r1.label}  signature {s1}",
        f"right:      {r2.label}  signature {s2}",
        f"isomorphic: {_yesno(same)}",
    ]
    return Report(pairs, "\n".join(lines) + "\n")


def cmd_count(ring: FiniteCommRing, caps: Caps) -> Report:
    meadow = _require(ring)
    rep = count_report(meadow)
    n_parts = len(rep.signature.parts)
    formula_self = f"2^{rep.char2_components} * 3^{n_parts - rep.char2_components}"
    formula_inv = (
        " * ".join(f"({p**k}-1)" for p, k in rep.signature.parts) or "(empty product)"
    )
    head_pairs, head_lines = _ring_header(ring)
    pairs = [
        ("command", "count"),
        *head_pairs,
        ("signature", str(rep.signature)),
        ("self_inverse.brute", str(rep.self_inverse_count)),
        ("self_inverse.formula", str(rep.self_inverse_formula)),
        ("self_inverse.elements", " ".join(str(x) for x in rep.self_inverse_elements)),
        ("invertible.brute", str(rep.invertible_count)),
        ("invertible.formula", str(rep.invertible_formula)),
        ("invertible.elements", " ".join(str(x) for x in rep.invertible_elements)),
    ]
    lines = [
        *head_lines,
        f"signature: {rep.signature}",
        f"self-inverse: {rep.self_inverse_count}  "
        f"(formula {formula_self} = {rep.self_inverse_formula}): "
        + " ".join(str(x) for x in rep.self_inverse_elements),
        f"invertible:   {rep.invertible_count}  "
        f"(formula {formula_inv} = {rep.invertible_formula}): "
        + " ".join(str(x) for x in rep.invertible_elements),
    ]
    return Report(pairs, "\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meadow",
        description="Finite meadows: verification, inverse tables, decomposition.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("human", "machine"),
        default="human",
        help="output style (default: human)",
    )
    common.add_argument(
        "--max-order",
        type=int,
        default=None,
        metavar="K",
        help="carrier cap for both structured and table rings "
        f"(defaults: {DEFAULT_STRUCTURED_BOUND} structured, {DEFAULT_TABLE_BOUND} table)",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", parents=[common], help="ring axioms + meadow verdict")
    p.add_argument("desc")
    p = sub.add_parser("invtable", parents=[common], help="full inverse table")
    p.add_argument("desc")
    p = sub.add_parser("decompose", parents=[common], help="decompose into fields")
    p.add_argument("desc")
    p = sub.add_parser("classify", parents=[common], help="all meadows of an order")
    p.add_argument("order", type=int)
    p = sub.add_parser("isomorphic", parents=[common], help="compare two meadows")
    p.add_argument("desc1")
    p.add_argument("desc2")
    p = sub.add_parser("count", parents=[common], help="self-inverse/invertible counts")
    p.add_argument("desc")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    caps = Caps()
    if args.max_order is not None:
        if args.max_order < 1:
            print("error: --max-order must be positive", file=sys.stderr)
            return 2
        caps = Caps(
            structured=args.max_order, table=args.max_order, check=args.max_order
        )

    try:
        if args.cmd == "check":
            report = cmd_check(parse_descriptor(args.desc, caps), caps)
        elif args.cmd == "invtable":
            report = cmd_invtable(parse_descriptor(args.desc, caps), caps)
        elif args.cmd == "decompose":
            report = cmd_decompose(parse_descriptor(args.desc, caps), caps)
        elif args.cmd == "classify":
            report = cmd_classify(args.order, caps)
        elif args.cmd == "isomorphic":
            report = cmd_isomorphic(
                parse_descriptor(args.desc1, caps),
                parse_descriptor(args.desc2, caps),
                caps,
            )
        elif args.cmd == "count":
            report = cmd_count(parse_descriptor(args.desc, caps), caps)
        else:  # pragma: no cover - argparse enforces the choices
            raise AssertionError(args.cmd)
    except (DescriptorError, RingSpecError, CarrierBoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotAMeadowError, AxiomViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConsistencyError, MeadowError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1

    if args.format == "machine":
        sys.stdout.write(render_machine(report))
    else:
        sys.stdout.write(report.human)
    return 0


def main_entry() -> None:  # console-script wrapper
    raise SystemExit(main())


__all__ = [
    "Caps",
    "parse_descriptor",
    "Report",
    "render_machine",
    "parse_machine",
    "main",
]
