"""Command-line interface: classify links, analyse branched covers, and
print the reference tables.

Exit codes: 0 success, 2 rejected input (syntax, parameters, unknown
names), 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Union

from . import tables
from .alexander import delta, determinant
from .classify import (
    ClassificationReport,
    Known,
    classification_report,
)
from .cover import (
    Catalog,
    CoverSpec,
    Evidence,
    FinitePi1,
    Inconclusive,
    JNData,
    LO,
    NoCTF_SeifertObstruction,
    PSL2R_Rep,
    PositiveBetti,
    SeifertInvariants,
    StarStatus,
    canonical_star_status,
    canonical_weights,
    general_psi_lo,
    jn_data,
    jn_lo_sufficient,
    nlo_seifert_invariants,
)
from .errors import LinkInputError, LinkSyntaxError, NotInCatalog
from .laurent import LaurentPoly
from .link_model import (
    HopfSum,
    OneCore,
    SeifertLink,
    TwoCore,
    ZeroCore,
    alias,
    alias_to_link,
    components,
    normalize,
    render,
)
from .orbifold import (
    FiniteGroupTag,
    b_bar,
    base_orbifold_sigma_n,
    fibre_data,
    finite_group,
    pi1_sigma_n_finite,
)

_CLASSIFY_CITATIONS = (
    "splice formulas for one-variable Alexander polynomials of Seifert links",
    "orientation catalog of braid-positive, quasipositive, and definite "
    "Seifert links",
    "simply laced plumbing catalog of definite Seifert links",
)
_COVER_CITATIONS = (
    "Seifert fibred structure of cyclic covers branched over Seifert links",
    "orbifold Euler characteristic test for finiteness of branched-cover "
    "fundamental groups",
    "rotation-number criterion for left-orderable lifts of PSL(2,R) "
    "representations",
    "Seifert-invariant obstruction to co-oriented taut foliations",
)
_TABLE_CITATIONS = (
    "catalog tables of spherical and Euclidean cyclic branched covers of "
    "Seifert links",
)


# -- link notation parser ------------------------------------------------------


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise LinkSyntaxError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise LinkSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    def sign(self) -> int:
        self.skip_ws()
        ch = self.text[self.pos] if self.pos < len(self.text) else ""
        if ch == "+":
            self.pos += 1
            return 1
        if ch == "-":
            self.pos += 1
            return -1
        raise LinkSyntaxError("expected '+' or '-'", self.pos)

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise LinkSyntaxError("unexpected trailing text", self.pos)


def _parse_core(scanner: _Scanner) -> SeifertLink:
    scanner.expect("L")
    scanner.expect("(")
    p = scanner.integer()
    scanner.expect(",")
    q = scanner.integer()
    scanner.expect(";")
    k = scanner.integer()
    scanner.expect(",")
    w = scanner.integer()
    signs: list[int] = []
    while scanner.peek() == ";" or (signs and scanner.peek() == ","):
        scanner.expect(";" if not signs else ",")
        signs.append(scanner.sign())
        if len(signs) == 2:
            break
    scanner.expect(")")
    scanner.end()
    if not signs:
        return ZeroCore(p, q, k, w)
    if len(signs) == 1:
        return OneCore(p, q, k, w, signs[0])
    return TwoCore(p, q, k, w, signs[0], signs[1])


def _parse_hopf(scanner: _Scanner) -> SeifertLink:
    plus = minus = 0
    while True:
        scanner.expect("#")
        count = scanner.integer()
        scanner.expect("H")
        if scanner.sign() > 0:
            plus += count
        else:
            minus += count
        if scanner.peek() != "#":
            break
    scanner.end()
    return HopfSum(plus, minus)


def parse_link(text: str) -> SeifertLink:
    """Parse link notation (core forms, Hopf sums, or aliases) into the
    raw, not yet normalized, link."""
    scanner = _Scanner(text)
    head = scanner.peek()
    if head == "L":
        return _parse_core(scanner)
    if head == "#":
        return _parse_hopf(scanner)
    if head in ("T", "P"):
        return alias_to_link(text)
    raise LinkSyntaxError("expected link notation", scanner.pos)


# -- JSON helpers --------------------------------------------------------------


def _fraction_json(value: Fraction) -> dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def _poly_json(poly: LaurentPoly) -> list[dict[str, int]]:
    return [{"exp": e, "coef": c} for e, c in poly.terms]


def _group_json(group: FiniteGroupTag) -> dict[str, Any]:
    out: dict[str, Any] = {
        "label": group.label,
        "order": group.group_order,
        "h1_order": group.h1_order,
    }
    return out


def _jn_json(data: JNData) -> dict[str, Any]:
    return {
        "thetas": [_fraction_json(t) for t in data.thetas],
        "sigma": _fraction_json(data.sigma),
        "r": data.r,
    }


def _invariants_json(inv: SeifertInvariants) -> dict[str, Any]:
    return {
        "e0": inv.e0,
        "coefficients": [_fraction_json(c) for c in inv.coefficients],
    }


def _evidence_json(evidence: Evidence) -> dict[str, Any]:
    if isinstance(evidence, FinitePi1):
        return {"kind": "finite_pi1", "group": _group_json(evidence.group)}
    if isinstance(evidence, NoCTF_SeifertObstruction):
        return {
            "kind": "no_ctf_seifert_obstruction",
            "invariants": _invariants_json(evidence.invariants),
        }
    if isinstance(evidence, PositiveBetti):
        return {"kind": "positive_betti", "n": evidence.n}
    if isinstance(evidence, PSL2R_Rep):
        return {"kind": "psl2r_rep", "data": _jn_json(evidence.data)}
    return {"kind": "catalog", "note": evidence.note}


def _evidence_text(evidence: Evidence) -> str:
    if isinstance(evidence, FinitePi1):
        return f"finite fundamental group {evidence.group.label}"
    if isinstance(evidence, NoCTF_SeifertObstruction):
        return (
            "no co-oriented taut foliation; Seifert invariants "
            f"{evidence.invariants.render()}"
        )
    if isinstance(evidence, PositiveBetti):
        return f"positive first Betti number at level {evidence.n}"
    if isinstance(evidence, PSL2R_Rep):
        data = evidence.data
        return (
            f"PSL(2,R) representation witness (sigma = {data.sigma}, "
            f"r = {data.r})"
        )
    return evidence.note


def _fraction_text(value: Fraction) -> str:
    return str(value)


# -- classify ------------------------------------------------------------------


def _g4_json(report: ClassificationReport) -> dict[str, Any]:
    if isinstance(report.g4, Known):
        return {"kind": "known", "value": report.g4.value}
    return {"kind": "strictly_less_than_genus"}


def _cmd_classify(args: argparse.Namespace) -> int:
    link = normalize(parse_link(args.link))
    report = classification_report(link)
    poly = delta(link)
    found = alias(link)
    if args.json:
        payload: dict[str, Any] = {
            "link": args.link,
            "normalized": render(link),
            "alias": found.name if found else None,
            "components": components(link),
            "is_prime": report.is_prime,
            "is_fibred": report.is_fibred,
            "in_P": report.in_P,
            "is_braid_positive": report.is_braid_positive,
            "is_sqp": report.is_sqp,
            "is_genus_zero": report.is_genus_zero,
            "g4_equals_g": report.g4_equals_g,
            "genus": report.genus,
            "g4": _g4_json(report),
            "is_definite": report.is_definite,
            "dynkin": str(report.dynkin) if report.dynkin else None,
            "ade_up_to_orientation": report.ade_up_to_orientation,
            "alexander": _poly_json(poly),
            "determinant": determinant(link),
            "citations": list(_CLASSIFY_CITATIONS),
        }
        print(json.dumps(payload, indent=2))
        return 0

    def flag(value: bool) -> str:
        return "yes" if value else "no"

    if isinstance(report.g4, Known):
        g4_text = str(report.g4.value)
    else:
        g4_text = "strictly less than the genus"
    lines = [
        ("link", args.link.strip()),
        ("normalized", render(link)),
        ("alias", found.name if found else "-"),
        ("components", str(components(link))),
        ("prime", flag(report.is_prime)),
        ("fibred", flag(report.is_fibred)),
        ("braid positive", flag(report.is_braid_positive)),
        ("strongly quasipositive", flag(report.is_sqp)),
        ("genus zero", flag(report.is_genus_zero)),
        ("genus", str(report.genus)),
        ("four-genus", g4_text),
        ("definite", flag(report.is_definite)),
        ("dynkin type", str(report.dynkin) if report.dynkin else "-"),
        ("ADE up to orientation", flag(report.ade_up_to_orientation)),
        ("alexander", poly.to_text()),
        ("determinant", str(determinant(link))),
    ]
    width = max(len(name) for name, _ in lines)
    for name, value in lines:
        print(f"{name.ljust(width)}  {value}")
    return 0


# -- cover ---------------------------------------------------------------------


def _cmd_cover(args: argparse.Namespace) -> int:
    link = normalize(parse_link(args.link))
    n = args.n
    found = alias(link)
    if args.weights is not None:
        weights = tuple(int(x) for x in args.weights.split(","))
        spec = CoverSpec(n, weights)
        data = jn_data(link, spec)
        outcome = general_psi_lo(link, spec)
        if args.json:
            payload: dict[str, Any] = {
                "link": args.link,
                "normalized": render(link),
                "alias": found.name if found else None,
                "n": n,
                "weights": list(weights),
                "jn": _jn_json(data),
                "jn_lo_sufficient": jn_lo_sufficient(data),
                "outcome": (
                    "left-orderable"
                    if isinstance(outcome, LO)
                    else "inconclusive"
                ),
                "evidence": (
                    _evidence_json(outcome.evidence)
                    if isinstance(outcome, LO)
                    else None
                ),
                "citations": list(_COVER_CITATIONS),
            }
            print(json.dumps(payload, indent=2))
            return 0
        print(f"link        {args.link.strip()}")
        print(f"normalized  {render(link)}")
        print(f"n           {n}")
        print(f"weights     {','.join(str(a) for a in weights)}")
        print(f"thetas      {', '.join(str(t) for t in data.thetas)}")
        print(f"sigma       {data.sigma}")
        print(f"r           {data.r}")
        if isinstance(outcome, LO):
            print("outcome     left-orderable")
            print(f"evidence    {_evidence_text(outcome.evidence)}")
        else:
            print("outcome     inconclusive")
        return 0

    base = b_bar(link, n)
    fibre = fibre_data(link, n)
    total_chi, base_if_unwrapped = base_orbifold_sigma_n(link, n)
    finite = pi1_sigma_n_finite(link, n)
    group = finite_group(link, n)
    status = canonical_star_status(link, n)
    invariants: Optional[SeifertInvariants]
    try:
        invariants = nlo_seifert_invariants(link, n)
    except (NotInCatalog, LinkInputError):
        invariants = None
    if args.json:
        payload = {
            "link": args.link,
            "normalized": render(link),
            "alias": found.name if found else None,
            "n": n,
            "base_orbifold": {
                "cone_orders": list(base.cone_orders),
                "chi": _fraction_json(base.chi),
                "geometry": base.geometry,
            },
            "fibre": {
                "s": fibre.s,
                "r": fibre.r,
                "cover_degree": fibre.cover_degree,
            },
            "cover_base_chi": _fraction_json(total_chi),
            "cover_base_orbifold": (
                list(base_if_unwrapped.cone_orders)
                if base_if_unwrapped is not None
                else None
            ),
            "pi1_finite": finite,
            "finite_group": _group_json(group) if group else None,
            "verdict": status.verdict,
            "evidence": _evidence_json(status.evidence),
            "seifert_invariants": (
                _invariants_json(invariants) if invariants else None
            ),
            "citations": list(_COVER_CITATIONS),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"link           {args.link.strip()}")
    print(f"normalized     {render(link)}")
    print(f"alias          {found.name if found else '-'}")
    print(f"n              {n}")
    print(f"base orbifold  {base.render()}")
    print(f"chi            {base.chi}  ({base.geometry})")
    print(f"fibre          s = {fibre.s}, r = {fibre.r}, "
          f"cover degree = {fibre.cover_degree}")
    if group is not None:
        order = group.group_order
        order_text = f", order {order}" if order is not None else ""
        print(f"pi1            finite: {group.label}{order_text}")
    else:
        print("pi1            infinite")
    print(f"verdict        {status.verdict}")
    print(f"evidence       {_evidence_text(status.evidence)}")
    if invariants is not None:
        print(f"seifert data   {invariants.render()}")
    return 0


# -- table ---------------------------------------------------------------------


def _print_columns(header: list[str], rows: list[list[str]]) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(cells: list[str]) -> str:
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(cells))
    print(fmt(header))
    print(fmt(["-" * w for w in widths]))
    for row in rows:
        print(fmt(row))


def _table_payload(name: str) -> tuple[list[str], list[list[str]], list[dict]]:
    rows = tables.build_table(name)
    if name == "ade-2fold":
        header = ["type", "link", "alias", "pi1(Sigma_2)", "order", "det"]
        text_rows = []
        json_rows = []
        for row in rows:
            order = row.group.group_order
            text_rows.append(
                [
                    str(row.dynkin),
                    render(row.link),
                    row.alias_name or "-",
                    row.group.label,
                    str(order) if order is not None else "-",
                    str(row.determinant),
                ]
            )
            json_rows.append(
                {
                    "dynkin": str(row.dynkin),
                    "link": render(row.link),
                    "alias": row.alias_name,
                    "group": _group_json(row.group),
                    "determinant": row.determinant,
                }
            )
        return header, text_rows, json_rows
    if name == "spherical":
        header = ["n", "family", "base", "reoriented", "type"]
        text_rows = [
            [
                str(row.n),
                row.family,
                row.base.render(),
                render(row.reoriented),
                str(row.dynkin),
            ]
            for row in rows
        ]
        json_rows = [
            {
                "n": row.n,
                "family": row.family,
                "instances": [render(link) for link in row.instances],
                "base": list(row.base.cone_orders),
                "reoriented": render(row.reoriented),
                "dynkin": str(row.dynkin),
            }
            for row in rows
        ]
        return header, text_rows, json_rows
    if name == "euclidean":
        header = ["n", "family", "base", "reoriented", "betti>0"]
        text_rows = [
            [
                str(row.n),
                row.family,
                row.base.render(),
                render(row.reoriented),
                "yes" if row.betti_positive else "no",
            ]
            for row in rows
        ]
        json_rows = [
            {
                "n": row.n,
                "family": row.family,
                "instances": [render(link) for link in row.instances],
                "base": list(row.base.cone_orders),
                "reoriented": render(row.reoriented),
                "betti_positive": row.betti_positive,
            }
            for row in rows
        ]
        return header, text_rows, json_rows
    if name == "higher-finite":
        header = ["link", "alias", "n", "pi1", "order"]
        text_rows = []
        json_rows = []
        for row in rows:
            order = row.group.group_order
            text_rows.append(
                [
                    render(row.link),
                    row.alias_name or "-",
                    str(row.n),
                    row.group.label,
                    str(order) if order is not None else "-",
                ]
            )
            json_rows.append(
                {
                    "link": render(row.link),
                    "alias": row.alias_name,
                    "n": row.n,
                    "group": _group_json(row.group),
                }
            )
        return header, text_rows, json_rows
    # canonical-status
    first = rows[0]
    levels = list(range(first.first_n, first.first_n + len(first.statuses)))
    header = ["link", "alias"] + [f"n={n}" for n in levels]
    text_rows = []
    json_rows = []
    for row in rows:
        cells = ["*" if s.star else "x" for s in row.statuses]
        text_rows.append([render(row.link), row.alias_name or "-"] + cells)
        json_rows.append(
            {
                "link": render(row.link),
                "alias": row.alias_name,
                "statuses": [
                    {
                        "n": n,
                        "verdict": status.verdict,
                        "evidence": _evidence_json(status.evidence),
                    }
                    for n, status in zip(levels, row.statuses)
                ],
            }
        )
    return header, text_rows, json_rows


def _cmd_table(args: argparse.Namespace) -> int:
    header, text_rows, json_rows = _table_payload(args.name)
    if args.json:
        print(
            json.dumps(
                {
                    "table": args.name,
                    "rows": json_rows,
                    "citations": list(_TABLE_CITATIONS),
                },
                indent=2,
            )
        )
        return 0
    _print_columns(header, text_rows)
    return 0


# -- entry point ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifertlinks",
        description=(
            "Exact invariants and branched-cover analysis for Seifert links"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="classification report for a link"
    )
    p_classify.add_argument("link", help="link notation, e.g. 'L(2,3;1,1)'")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=_cmd_classify)

    p_cover = sub.add_parser(
        "cover", help="branched-cover analysis for a link"
    )
    p_cover.add_argument("link")
    p_cover.add_argument("--n", type=int, required=True, help="cover index")
    p_cover.add_argument(
        "--weights",
        help="comma-separated branching weights, one per component",
    )
    p_cover.add_argument("--json", action="store_true")
    p_cover.set_defaults(func=_cmd_cover)

    p_table = sub.add_parser("table", help="print a reference table")
    p_table.add_argument("name", help=", ".join(tables.TABLE_NAMES))
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=_cmd_table)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LinkInputError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except Exception as error:  # noqa: BLE001
        print(f"internal error: {error}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
