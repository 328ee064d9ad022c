"""A tiny expression language for products in the bicyclic monoid.

    expr := term ('*' term)* ['in' CARRIER]
    term := atom+                      juxtaposition also multiplies
    atom := 'a' ['^' INT] | 'b' ['^' INT] | '1' | '0'

``0`` is the zero of C+ with an adjoined zero.  Runs of non-zero atoms are
multiplied in C(a,b); when a zero is present every such run must land in C+.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import ONE, ZERO, Carrier, Elem, ExtElem, contains, format_elem, mul, mul_ext

CARRIER_NAMES = {
    "C": Carrier.FULL,
    "FULL": Carrier.FULL,
    "C+": Carrier.CPLUS,
    "CPLUS": Carrier.CPLUS,
    "C-": Carrier.CMINUS,
    "CMINUS": Carrier.CMINUS,
    "OMEGA": Carrier.OMEGA,
    "S": Carrier.S_ZERO,
    "S_ZERO": Carrier.S_ZERO,
}

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>in\b)|(?P<sym>[ab^*]))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class CarrierMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Evaluation:
    value: ExtElem
    factors: tuple[ExtElem, ...]
    query: Carrier | None
    membership: dict

    def render(self) -> str:
        lines = [format_elem(self.value)]
        for c, flag in self.membership.items():
            mark = "*" if c is self.query else " "
            lines.append(f"{mark} in {c.name}: {'yes' if flag else 'no'}")
        return "\n".join(lines)


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
        if kind == "word":
            # the rest of the line names the carrier
            name = text[pos:].strip()
            if name not in CARRIER_NAMES:
                raise ParseError(f"unknown carrier {name!r}", pos + len(text[pos:]) - len(text[pos:].lstrip()))
            out.append(("carrier", name, pos))
            break
    return out


def parse(text: str) -> tuple[list[list[ExtElem]], Carrier | None]:
    """Split ``text`` into terms of atoms plus an optional carrier query."""
    toks = _tokens(text)
    terms: list[list[ExtElem]] = [[]]
    query = None
    k = 0
    while k < len(toks):
        kind, val, pos = toks[k]
        if kind == "sym" and val in "ab":
            exp = 1
            if k + 1 < len(toks) and toks[k + 1][1] == "^":
                if k + 2 >= len(toks) or toks[k + 2][0] != "int":
                    raise ParseError("expected an exponent after '^'", toks[k + 1][2] + 1)
                exp = int(toks[k + 2][1])
                k += 2
            terms[-1].append(Elem(exp, 0) if val == "b" else Elem(0, exp))
        elif kind == "int":
            if val not in ("0", "1"):
                raise ParseError(f"bare integer {val} is not an element", pos)
            terms[-1].append(ZERO if val == "0" else ONE)
        elif val == "*":
            if not terms[-1]:
                raise ParseError("missing factor before '*'", pos)
            terms.append([])
        elif kind == "word":
            if not terms[-1]:
                raise ParseError("missing factor before 'in'", pos)
            query = CARRIER_NAMES[toks[k + 1][1]]
            k += 1
        else:
            raise ParseError(f"unexpected {val!r}", pos)
        k += 1
    if not terms[-1]:
        raise ParseError("expected a factor", len(text))
    return terms, query


def _runs(atoms: list[ExtElem]) -> list[ExtElem]:
    """Collapse maximal runs of non-zero atoms to their product in C(a,b)."""
    out: list[ExtElem] = []
    run: Elem | None = None
    for a in atoms:
        if a is ZERO:
            if run is not None:
                out.append(run)
            out.append(ZERO)
            run = None
        else:
            run = a if run is None else mul(run, a)
    if run is not None:
        out.append(run)
    return out


def evaluate(text: str) -> Evaluation:
    terms, query = parse(text)
    factors = tuple(f for t in terms for f in _runs(t))
    parts = _runs([a for t in terms for a in t])
    value = parts[0]
    if ZERO in parts:
        bad = [x for x in parts if not contains(Carrier.S_ZERO, x)]
        if bad:
            raise CarrierMismatchError(f"{format_elem(bad[0])} is not in C+, so it cannot multiply with 0")
        for x in parts[1:]:
            value = mul_ext(value, x)
    carriers = [Carrier.S_ZERO] if value is ZERO else list(Carrier)
    membership = {c: contains(c, value) for c in carriers}
    if query is not None:
        membership[query] = contains(query, value)
    return Evaluation(value, factors, query, membership)
