"""Text formats: the rule-based theory language and stratified classical theories.

Rule-based theories take one declaration per line::

    axiom: f.
    premise: f [rank n].
    strict: f1, ..., fn -> f.
    defeasible d1: f1, ..., fn => f [rank n].
    contrary: f of g.
    rulepref: d1 < d2.        # also '=' for equally preferred
    prempref: f < g.

A syntax error on one line does not stop the parser; every bad line gets
its own diagnostic and :class:`ParseError` carries all of them.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from .errors import AspicError, TheoryError
from .language import (
    ArgumentationTheory,
    ContrarinessMap,
    Formula,
    Rule,
    RuleKind,
    parse_literal,
)


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str
    expected: tuple[str, ...] = ()

    def __str__(self) -> str:
        exp = f" (expected {', '.join(self.expected)})" if self.expected else ""
        return f"{self.line}:{self.column}: {self.message}{exp}"


class ParseError(AspicError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


class DSLWarning(UserWarning):
    pass


_TOKEN = re.compile(r"\s*(?:(->|=>|[:,.<=])|([~\-]*[A-Za-z_][A-Za-z0-9_']*)|(-?\d+)|(\S))")
KEYWORDS = ("axiom", "premise", "strict", "defeasible", "contrary", "rulepref", "prempref")


class _LineError(Exception):
    def __init__(self, column: int, message: str, expected: tuple[str, ...] = ()):
        self.column = column
        self.message = message
        self.expected = expected


class _Line:
    def __init__(self, text: str):
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                break
            if m.group(1):
                self.toks.append(("punct", m.group(1), m.start(1) + 1))
            elif m.group(2):
                self.toks.append(("word", m.group(2), m.start(2) + 1))
            elif m.group(3):
                self.toks.append(("int", m.group(3), m.start(3) + 1))
            elif m.group(4):
                raise _LineError(m.start(4) + 1, f"unexpected character {m.group(4)!r}")
            pos = m.end()
        self.end_col = len(text.rstrip()) + 1
        self.i = 0

    def peek(self):
        if self.i < len(self.toks):
            return self.toks[self.i]
        return ("end", "", self.end_col)

    def expect_punct(self, *options: str) -> str:
        kind, val, col = self.peek()
        if kind != "punct" or val not in options:
            raise _LineError(col, f"unexpected {val or 'end of line'!r}", tuple(f"'{o}'" for o in options))
        self.i += 1
        return val

    def at(self, kind: str, val: str | None = None) -> bool:
        k, v, _ = self.peek()
        return k == kind and (val is None or v == val)

    def word(self, what: str = "formula") -> tuple[str, int]:
        kind, val, col = self.peek()
        if kind != "word":
            raise _LineError(col, f"unexpected {val or 'end of line'!r}", (what,))
        self.i += 1
        return val, col

    def literal(self) -> Formula:
        val, col = self.word("literal")
        try:
            parse_literal(val)
        except ValueError:
            raise _LineError(col, f"malformed literal {val!r}", ("atom", "-atom", "~atom", "~-atom")) from None
        return Formula(val)

    def rank(self) -> int | None:
        if self.at("word", "rank"):
            self.i += 1
            kind, val, col = self.peek()
            if kind != "int":
                raise _LineError(col, f"unexpected {val or 'end of line'!r}", ("integer",))
            self.i += 1
            return int(val)
        return None

    def finish(self) -> None:
        self.expect_punct(".")
        kind, val, col = self.peek()
        if kind != "end":
            raise _LineError(col, f"unexpected {val!r} after '.'", ("end of line",))

    def antecedents(self, arrow: str) -> list[Formula]:
        out = []
        if self.at("punct", arrow):
            return out
        out.append(self.literal())
        while not self.at("punct", arrow):
            self.expect_punct(",", arrow)
            out.append(self.literal())
        return out


@dataclass
class _Collected:
    axioms: list
    premises: list
    premise_ranks: dict
    strict: list
    defeasible: list
    rule_ranks: dict
    contraries: list
    rule_prefs: list
    prem_prefs: list


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_theory(text: str) -> ArgumentationTheory:
    """Parse a theory; raise :class:`ParseError` with every diagnostic found."""
    c = _Collected([], [], {}, [], [], {}, [], [], [])
    diags: list[Diagnostic] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        try:
            _parse_line(_Line(body), c, lineno)
        except _LineError as e:
            diags.append(Diagnostic(lineno, e.column, e.message, e.expected))
    if diags:
        raise ParseError(diags)
    if not (c.axioms or c.premises or c.strict or c.defeasible):
        warnings.warn("theory is empty", DSLWarning, stacklevel=2)

    names = {r.name.display: r for r in c.defeasible}
    rule_pairs = []
    for a, b, op, (ln, col) in c.rule_prefs:
        for n, cc in ((a, col), (b, col)):
            if n not in names:
                diags.append(Diagnostic(ln, cc, f"unknown rule name {n!r}", tuple(sorted(names))))
        if a in names and b in names:
            rule_pairs.append((names[a], names[b]))
            if op == "=":
                rule_pairs.append((names[b], names[a]))
    prem_pairs = []
    for a, b, op, _ in c.prem_prefs:
        prem_pairs.append((a, b))
        if op == "=":
            prem_pairs.append((b, a))
    if diags:
        raise ParseError(diags)
    return ArgumentationTheory.build(
        strict_rules=c.strict,
        defeasible_rules=c.defeasible,
        axioms=c.axioms,
        ordinary=c.premises,
        contrariness=ContrarinessMap(c.contraries),
        rule_pairs=rule_pairs,
        rule_ranks={names[n]: r for n, r in c.rule_ranks.items()} or None,
        premise_pairs=prem_pairs,
        premise_ranks=c.premise_ranks or None,
    )


def _parse_line(ln: _Line, c: _Collected, lineno: int) -> None:
    kw, col = ln.word("declaration")
    if kw not in KEYWORDS:
        raise _LineError(col, f"unknown declaration {kw!r}", KEYWORDS)
    if kw == "defeasible":
        name, _ = ln.word("rule name")
        ln.expect_punct(":")
        ante = ln.antecedents("=>")
        ln.expect_punct("=>")
        cons = ln.literal()
        rank = ln.rank()
        ln.finish()
        rule = Rule(ante, cons, RuleKind.DEFEASIBLE, Formula(name))
        c.defeasible.append(rule)
        if rank is not None:
            c.rule_ranks[name] = rank
        return
    ln.expect_punct(":")
    if kw == "axiom":
        c.axioms.append(ln.literal())
        ln.finish()
    elif kw == "premise":
        f = ln.literal()
        rank = ln.rank()
        ln.finish()
        c.premises.append(f)
        if rank is not None:
            c.premise_ranks[f] = rank
    elif kw == "strict":
        ante = ln.antecedents("->")
        ln.expect_punct("->")
        cons = ln.literal()
        ln.finish()
        c.strict.append(Rule(ante, cons, RuleKind.STRICT))
    elif kw == "contrary":
        f = ln.literal()
        of, ocol = ln.word("'of'")
        if of != "of":
            raise _LineError(ocol, f"unexpected {of!r}", ("'of'",))
        g = ln.literal()
        ln.finish()
        c.contraries.append((f, g))
    elif kw == "rulepref":
        a, acol = ln.word("rule name")
        op = ln.expect_punct("<", "=")
        b, _ = ln.word("rule name")
        ln.finish()
        c.rule_prefs.append((a, b, op, (lineno, acol)))
    elif kw == "prempref":
        pcol = ln.peek()[2]
        a = ln.literal()
        op = ln.expect_punct("<", "=")
        b = ln.literal()
        ln.finish()
        c.prem_prefs.append((a, b, op, (lineno, pcol)))


def format_theory(theory: ArgumentationTheory) -> str:
    """Render a theory in the text format; parsing the output gives the same theory."""
    lines = []
    for f in sorted(theory.kb.axioms):
        lines.append(f"axiom: {f}.")
    pranks = theory.premise_preorder.ranks
    for f in sorted(theory.kb.ordinary):
        suffix = f" rank {pranks[f]}" if f in pranks else ""
        lines.append(f"premise: {f}{suffix}.")
    for r in theory.strict_rules:
        ante = ", ".join(a.display for a in r.antecedents)
        lines.append(f"strict: {ante} -> {r.consequent}." if ante else f"strict: -> {r.consequent}.")
    rranks = theory.rule_preorder.ranks
    for r in theory.defeasible_rules:
        ante = ", ".join(a.display for a in r.antecedents)
        body = f"{ante} => {r.consequent}" if ante else f"=> {r.consequent}"
        suffix = f" rank {rranks[r]}" if r in rranks else ""
        lines.append(f"defeasible {r.name}: {body}{suffix}.")
    for f, g in theory.contrariness.declared:
        lines.append(f"contrary: {f} of {g}.")
    for a, b in theory.rule_preorder.declared_pairs:
        lines.append(f"rulepref: {a.name} < {b.name}.")
    for a, b in theory.premise_preorder.declared_pairs:
        lines.append(f"prempref: {a} < {b}.")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# stratified classical theories:  "stratum 1: x. stratum 2: -y; x > y.  query: y."

def parse_stratified(text: str):
    from .classical.logic import FormulaSyntaxError, parse_formula
    from .classical.subtheories import StratifiedTheory

    clean = "\n".join(_strip_comment(l) for l in text.splitlines())
    diags: list[Diagnostic] = []

    def position(offset: int) -> tuple[int, int]:
        before = clean[:offset]
        return before.count("\n") + 1, offset - (before.rfind("\n") + 1) + 1

    strata: dict[int, list] = {}
    queries: list = []
    body = clean if clean.rstrip().endswith(".") or not clean.strip() else clean.rstrip() + "."
    start = 0
    for m in re.finditer(r"\.", body):
        stmt = body[start:m.start()]
        offset = start
        start = m.end()
        if not stmt.strip():
            continue
        lead = len(stmt) - len(stmt.lstrip())
        head = re.match(r"\s*(stratum\s+(\d+)|query)\s*:", stmt)
        if not head:
            ln, col = position(offset + lead)
            diags.append(Diagnostic(ln, col, "expected a stratum or query declaration", ("stratum <n>:", "query:")))
            continue
        pos = head.end()
        for piece in stmt[pos:].split(";"):
            if piece.strip():
                try:
                    f = parse_formula(piece)
                except FormulaSyntaxError as e:
                    ln, col = position(offset + pos + e.column - 1)
                    diags.append(Diagnostic(ln, col, str(e).split(": ", 1)[-1], e.expected))
                else:
                    if head.group(2):
                        strata.setdefault(int(head.group(2)), []).append(f)
                    else:
                        queries.append(f)
            pos += len(piece) + 1
    if diags:
        raise ParseError(diags)
    return StratifiedTheory(tuple(tuple(strata[k]) for k in sorted(strata)), tuple(queries))


def format_stratified(theory) -> str:
    lines = [f"stratum {i}: " + "; ".join(str(f) for f in s) + "." for i, s in enumerate(theory.strata, 1)]
    if theory.queries:
        lines.append("query: " + "; ".join(str(f) for f in theory.queries) + ".")
    return "\n".join(lines) + "\n"
