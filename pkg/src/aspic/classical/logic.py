"""Propositional formulas, a parser, and exact truth-table entailment.

Valuations are evaluated bit-parallel: with ``k`` atoms every formula maps
to an integer of ``2**k`` bits, one bit per valuation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from ..errors import AtomBudget

MAX_ATOMS = 20


class PropFormula:
    __slots__ = ()

    def atoms(self) -> frozenset[str]:
        raise NotImplementedError

    def __str__(self) -> str:
        return render(self)

    def __lt__(self, other: "PropFormula") -> bool:
        return str(self) < str(other)


@dataclass(frozen=True, eq=True, repr=False)
class Atom(PropFormula):
    name: str

    def atoms(self):
        return frozenset((self.name,))

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True, eq=True, repr=False)
class Not(PropFormula):
    sub: PropFormula

    def atoms(self):
        return self.sub.atoms()

    def __repr__(self):
        return f"Not({self.sub!r})"


@dataclass(frozen=True, eq=True, repr=False)
class Binary(PropFormula):
    op: str  # "&", "|" or ">"
    left: PropFormula
    right: PropFormula

    def atoms(self):
        return self.left.atoms() | self.right.atoms()

    def __repr__(self):
        return f"Binary({self.op!r}, {self.left!r}, {self.right!r})"


def And(a: PropFormula, b: PropFormula) -> Binary:
    return Binary("&", a, b)


def Or(a: PropFormula, b: PropFormula) -> Binary:
    return Binary("|", a, b)


def Implies(a: PropFormula, b: PropFormula) -> Binary:
    return Binary(">", a, b)


_PREC = {">": 1, "|": 2, "&": 3}
_UNICODE = {"&": "∧", "|": "∨", ">": "⊃", "-": "¬"}


def render(f: PropFormula, unicode: bool = False, _parent: int = 0) -> str:
    neg = _UNICODE["-"] if unicode else "-"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return neg + render(f.sub, unicode, 4)
    p = _PREC[f.op]
    sym = _UNICODE[f.op] if unicode else f.op
    # '>' is right associative, '&' and '|' left associative
    lp, rp = (p + 1, p) if f.op == ">" else (p, p + 1)
    text = f"{render(f.left, unicode, lp)} {sym} {render(f.right, unicode, rp)}"
    return f"({text})" if p < _parent else text


def negate(f: PropFormula) -> PropFormula:
    """Negation with double-negation collapse."""
    return f.sub if isinstance(f, Not) else Not(f)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(.))")


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, column: int, expected: tuple[str, ...] = ()):
        super().__init__(f"column {column}: {message}")
        self.column = column
        self.expected = expected


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1):
            out.append(("atom", m.group(1), m.start(1) + 1))
        elif m.group(2):
            ch = m.group(2)
            if ch not in "-~¬&|>()∧∨⊃":
                raise FormulaSyntaxError(f"unexpected character {ch!r}", m.start(2) + 1)
            ch = {"~": "-", "¬": "-", "∧": "&", "∨": "|", "⊃": ">"}.get(ch, ch)
            out.append(("op", ch, m.start(2) + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self) -> PropFormula:
        f = self.implication()
        kind, val, col = self.peek()
        if kind != "end":
            raise FormulaSyntaxError(f"unexpected {val!r}", col, ("&", "|", ">", "end"))
        return f

    def implication(self):
        left = self.binary("|")
        if self.peek()[1] == ">" and self.peek()[0] == "op":
            self.take()
            return Implies(left, self.implication())
        return left

    def binary(self, op):
        sub = (lambda: self.binary("&")) if op == "|" else self.unary
        left = sub()
        while self.peek()[0] == "op" and self.peek()[1] == op:
            self.take()
            left = Binary(op, left, sub())
        return left

    def unary(self):
        kind, val, col = self.take()
        if kind == "op" and val == "-":
            return Not(self.unary())
        if kind == "op" and val == "(":
            inner = self.implication()
            k2, v2, c2 = self.take()
            if v2 != ")":
                raise FormulaSyntaxError("expected ')'", c2, (")",))
            return inner
        if kind == "atom":
            return Atom(val)
        raise FormulaSyntaxError(f"unexpected {val or 'end of input'!r}", col, ("atom", "-", "("))


def parse_formula(text: str) -> PropFormula:
    """Parse ``- & | >`` syntax (``>`` is material implication, right associative)."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# truth tables

class TruthTable:
    """Bit-parallel evaluation over a fixed atom universe."""

    def __init__(self, atoms: Iterable[str]):
        self.atoms = tuple(sorted(set(atoms)))
        k = len(self.atoms)
        if k > MAX_ATOMS:
            raise AtomBudget(f"{k} atoms exceed the bound of {MAX_ATOMS}")
        self.size = 1 << k
        self.full = (1 << self.size) - 1
        self.columns = {}
        for i, a in enumerate(self.atoms):
            width = 1 << i
            pattern = ((1 << width) - 1) << width
            length = width << 1
            while length < self.size:
                pattern |= pattern << length
                length <<= 1
            self.columns[a] = pattern & self.full
        self._memo: dict[PropFormula, int] = {}

    def value(self, f: PropFormula) -> int:
        got = self._memo.get(f)
        if got is not None:
            return got
        if isinstance(f, Atom):
            try:
                v = self.columns[f.name]
            except KeyError:
                raise ValueError(f"atom {f.name!r} outside the table") from None
        elif isinstance(f, Not):
            v = self.full ^ self.value(f.sub)
        elif f.op == "&":
            v = self.value(f.left) & self.value(f.right)
        elif f.op == "|":
            v = self.value(f.left) | self.value(f.right)
        else:
            v = (self.full ^ self.value(f.left)) | self.value(f.right)
        self._memo[f] = v
        return v

    def models(self, S: Iterable[PropFormula]) -> int:
        v = self.full
        for f in S:
            v &= self.value(f)
        return v

    def consistent(self, S: Iterable[PropFormula]) -> bool:
        return self.models(S) != 0

    def entails(self, S: Iterable[PropFormula], phi: PropFormula) -> bool:
        return self.models(S) & ~self.value(phi) & self.full == 0

    def equivalent(self, a: PropFormula, b: PropFormula) -> bool:
        return self.value(a) == self.value(b)


def _table_for(*groups) -> TruthTable:
    atoms = set()
    for g in groups:
        for f in g:
            atoms |= f.atoms()
    return TruthTable(atoms)


def entails(S: Iterable[PropFormula], phi: PropFormula) -> bool:
    S = list(S)
    return _table_for(S, [phi]).entails(S, phi)


def consistent(S: Iterable[PropFormula]) -> bool:
    S = list(S)
    return _table_for(S).consistent(S)
