"""Command-line interface.

Exit codes: 0 ok, 1 postulate violation or failed campaign, 2 parse error,
3 ill-formed theory, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import serialize
from .arguments import BuildLimits
from .dsl import ParseError, parse_stratified, parse_theory
from .errors import BudgetExceeded, MissingContradictory, TheoryError
from .framework import build_saf
from .language import check_well_defined
from .semantics import SEMANTICS, enumerate_extensions

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_THEORY, EXIT_BUDGET = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    theory: str
    semantics: str = "preferred"
    cf_mode: str = "att"
    link: str = "last"
    setcomp: str = "eli"
    mode: str = "saf"
    transpose: bool = False
    max_depth: int = 32
    max_args: int = 100_000
    fmt: str = "json"

    @property
    def limits(self) -> BuildLimits:
        return BuildLimits(max_depth=self.max_depth, max_arguments=self.max_args)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(cfg: RunConfig):
    theory = parse_theory(_read(cfg.theory))
    return theory.transposed() if cfg.transpose else theory


def _saf(cfg: RunConfig):
    return build_saf(_load(cfg), mode=cfg.mode, limits=cfg.limits, link=cfg.link, setcomp=cfg.setcomp)


def _emit(data, cfg: RunConfig, text_lines=None) -> None:
    if cfg.fmt == "text" and text_lines is not None:
        sys.stdout.write("\n".join(text_lines) + "\n")
    else:
        sys.stdout.write(serialize.dumps(data))


def cmd_check(cfg: RunConfig, ns) -> int:
    report = check_well_defined(_load(cfg), cfg.mode, seed=ns.seed)
    d = report.to_dict()
    _emit(d, cfg, [f"{k}: {v}" for k, v in d.items() if not isinstance(v, (dict, list))])
    return EXIT_OK


def cmd_args(cfg: RunConfig, ns) -> int:
    saf = _saf(cfg)
    data = {"arguments": [a.to_dict() for a in saf.args], "metadata": saf.metadata}
    _emit(data, cfg, [f"{a.id}  {a.text()}" for a in saf.args])
    return EXIT_OK


def cmd_attacks(cfg: RunConfig, ns) -> int:
    saf = _saf(cfg)
    data = serialize.saf_to_dict(saf)
    lines = [f"{at.attacker.text()} -> {at.target.text()} on {at.on.text()} ({at.kind.value})"
             for at in sorted(saf.attacks, key=lambda x: x.sort_key())]
    lines += [f"{d.attacker.text()} => {d.target.text()} (defeat)"
              for d in sorted(saf.defeats, key=lambda x: x.sort_key())]
    _emit(data, cfg, lines)
    return EXIT_OK


def cmd_solve(cfg: RunConfig, ns) -> int:
    saf = _saf(cfg)
    exts = enumerate_extensions(saf.to_abstract(), cfg.semantics, cfg.cf_mode).with_justified(saf.args)
    by_id = saf.by_id()
    data = exts.to_dict()
    data["ordering"] = saf.ordering.describe()
    lines = [" ".join(sorted(by_id[i].text() for i in e)) or "(empty)" for e in exts]
    lines += [f"{phi}: {status}" for phi, status in sorted(exts.justified.items())]
    _emit(data, cfg, lines)
    return EXIT_OK


def cmd_postulates(cfg: RunConfig, ns) -> int:
    from .postulates import check_postulates

    theory = _load(cfg)
    saf = build_saf(theory, mode=cfg.mode, limits=cfg.limits, link=cfg.link, setcomp=cfg.setcomp)
    reports = check_postulates(saf, theory, cfg.semantics, cfg.cf_mode)
    ok = all(r.passed for r in reports)
    data = {"semantics": cfg.semantics, "cf_mode": cfg.cf_mode, "passed": ok,
            "extensions": [r.to_dict() for r in reports]}
    _emit(data, cfg, [f"{'PASS' if r.passed else 'FAIL'} {' '.join(r.extension)}" for r in reports])
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_classical(cfg: RunConfig, ns) -> int:
    from .classical.instantiation import build_classical_csaf

    st = parse_stratified(_read(cfg.theory))
    saf = build_classical_csaf(st.formulas, [list(s) for s in st.strata], link=cfg.link,
                               setcomp=cfg.setcomp, attack=ns.attack, queries=st.queries)
    exts = enumerate_extensions(saf.to_abstract(), cfg.semantics, cfg.cf_mode).with_justified(saf.args)
    by_id = saf.by_id()
    data = serialize.saf_to_dict(saf)
    data["extensions"] = exts.to_dict()
    lines = [f"{a.id}  {a.text()}" for a in saf.args]
    lines += ["extension: " + " ".join(sorted(by_id[i].text() for i in e)) for e in exts]
    lines += [f"{phi}: {status}" for phi, status in sorted(exts.justified.items())]
    _emit(data, cfg, lines)
    return EXIT_OK


def cmd_ps(cfg: RunConfig, ns) -> int:
    from .classical.subtheories import preferred_subtheories, verify_ps_correspondence

    st = parse_stratified(_read(cfg.theory))
    ps = sorted(sorted(map(str, p)) for p in preferred_subtheories(st))
    ok, witness = verify_ps_correspondence(st, link=cfg.link, setcomp=cfg.setcomp)
    data = {"preferred_subtheories": ps, "correspondence": ok, "witness": witness}
    _emit(data, cfg, ["{" + ", ".join(p) + "}" for p in ps] + [f"correspondence: {ok}"])
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_dot(cfg: RunConfig, ns) -> int:
    saf = _saf(cfg)
    if ns.out_prefix:
        for edges in ("attacks", "defeats"):
            with open(f"{ns.out_prefix}_{edges}.dot", "w", encoding="utf-8") as fh:
                fh.write(serialize.to_dot(saf, edges, edges))
        return EXIT_OK
    sys.stdout.write(serialize.to_dot(saf, ns.edges))
    return EXIT_OK


def cmd_campaign(cfg: RunConfig, ns) -> int:
    import random

    if ns.kind == "postulates":
        from .postulates import run_postulate_campaign

        post, equiv = run_postulate_campaign(ns.count, ns.seed)
        data = {"postulates": post.to_dict(), "att_def_equivalence": equiv.to_dict()}
        ok = post.passed and equiv.passed
    else:
        from .classical.subtheories import verify_ps_correspondence
        from .generators import random_stratified

        rng = random.Random(ns.seed)
        fails = []
        for i in range(ns.count):
            st = random_stratified(rng)
            good, witness = verify_ps_correspondence(st, link=cfg.link, setcomp=cfg.setcomp)
            if not good:
                fails.append({"index": i, "strata": [[str(f) for f in s] for s in st.strata], "witness": witness})
        data = {"count": ns.count, "seed": ns.seed, "failures": fails, "passed": not fails}
        ok = not fails
    _emit(data, cfg, [f"passed: {ok}"])
    return EXIT_OK if ok else EXIT_VIOLATION


COMMANDS = {
    "check": (cmd_check, "well-definedness report"),
    "args": (cmd_args, "list the arguments"),
    "attacks": (cmd_attacks, "attacks and defeats"),
    "solve": (cmd_solve, "enumerate extensions"),
    "postulates": (cmd_postulates, "check rationality postulates on extensions"),
    "classical": (cmd_classical, "classical-logic framework from a stratified theory"),
    "ps": (cmd_ps, "preferred subtheories and the stable-extension correspondence"),
    "dot": (cmd_dot, "Graphviz export"),
    "campaign": (cmd_campaign, "seeded randomized property campaign"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aspic", description="Structured argumentation with preferences.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name != "campaign":
            p.add_argument("theory", nargs="?", help="theory file, or - for stdin")
            p.add_argument("--theory", dest="theory_opt", metavar="FILE", help="same as the positional argument")
        p.add_argument("--link", choices=("last", "weakest"), default="last")
        p.add_argument("--setcomp", choices=("eli", "dem"), default="eli")
        p.add_argument("--mode", choices=("saf", "c-saf"), default="saf")
        p.add_argument("--cf", dest="cf_mode", choices=("att", "def"), default="att")
        p.add_argument("--semantics", choices=SEMANTICS, default="complete" if name == "postulates" else "preferred")
        p.add_argument("--transpose", action="store_true", help="close strict rules under transposition first")
        p.add_argument("--max-depth", type=int, default=32)
        p.add_argument("--max-args", type=int, default=100_000)
        p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)
        if name == "classical":
            p.add_argument("--attack", choices=("direct-defeat", "direct-undercut", "undermine"), default="direct-defeat")
        if name == "dot":
            p.add_argument("--edges", choices=("attacks", "defeats", "both"), default="both")
            p.add_argument("--out-prefix", help="write <prefix>_attacks.dot and <prefix>_defeats.dot")
        if name == "campaign":
            p.add_argument("--kind", choices=("postulates", "ps"), default="postulates")
            p.add_argument("--count", type=int, default=200)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command != "campaign":
        if ns.theory and ns.theory_opt and ns.theory != ns.theory_opt:
            parser.error("theory given twice")
        ns.theory = ns.theory or ns.theory_opt
        if not ns.theory:
            parser.error("a theory file is required")
    cfg = RunConfig(
        theory=getattr(ns, "theory", ""),
        semantics=ns.semantics,
        cf_mode=ns.cf_mode,
        link=ns.link,
        setcomp=ns.setcomp,
        mode=ns.mode,
        transpose=ns.transpose,
        max_depth=ns.max_depth,
        max_args=ns.max_args,
        fmt=ns.fmt,
    )
    handler = COMMANDS[ns.command][0]
    try:
        return handler(cfg, ns)
    except ParseError as e:
        for d in e.diagnostics:
            print(f"{cfg.theory}:{d}", file=sys.stderr)
        return EXIT_PARSE
    except (TheoryError, MissingContradictory) as e:
        print(f"ill-formed theory: {e}", file=sys.stderr)
        return EXIT_THEORY
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
