"""Shared fixture theories and lookup helpers for the test-suite."""

from __future__ import annotations

from pathlib import Path

from aspic import build_saf, parse_theory
from aspic.arguments import find

DATA = Path(__file__).parent / "data"

EXAMPLE1 = (DATA / "example1.aspic").read_text()

# expert vs child on a violin; the expert's premise is preferred
STRADIVARIUS = """
premise: s.
premise: -s.
defeasible d1: s => e.
prempref: -s < s.
"""

# two chains in conflict on r; last link ranks q=>-r lowest and -r=>s highest
CHAINS = """
premise: p.
premise: q.
defeasible d1: p => r.
defeasible d2: q => -r.
defeasible d3: -r => s.
rulepref: d2 < d1.
rulepref: d1 < d3.
"""

# labels used for the worked example's eight arguments
EXAMPLE1_TEXT = {
    "A'": "a",
    "A": "[a => p]",
    "B1": "~s",
    "B1'": "[~s => t]",
    "B2": "r",
    "B2'": "[r => q]",
    "B": "[[~s => t], [r => q] -> -p]",
    "C": "-r",
}

CHAINS_TEXT = {
    "A1": "p",
    "A2": "[p => r]",
    "B1": "q",
    "B2": "[q => -r]",
    "B3": "[[q => -r] => s]",
}


def example1_saf(link: str = "last", setcomp: str = "eli", transpose: bool = False):
    theory = parse_theory(EXAMPLE1)
    if transpose:
        theory = theory.transposed()
    return build_saf(theory, link=link, setcomp=setcomp)


def labelled(saf, table: dict[str, str]) -> dict:
    return {k: find(saf.args, v) for k, v in table.items()}
