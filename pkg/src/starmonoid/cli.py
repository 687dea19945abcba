"""Command line driver: ``starmonoid <command> [options]``.

Exit codes: 0 everything verified, 2 something refuted, 3 something
inconclusive, 1 usage or resource errors. Every option can also be set
through an environment variable ``STARMONOID_<OPTION>`` (for example
``STARMONOID_MAX_VISITED=500000``); command line flags win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .enumeration import (
    DEFAULT_MAX_ELEMENTS,
    GRAPH_CLASSES,
    MONOID_CLASSES,
    ResourceLimitExceeded,
    card_formula,
    derive_presentation,
    generate_class,
    predicate_monoid,
)
from .presentation import format_presentation, load_presentation
from .rewrite import SearchLimits
from .todd_coxeter import DEFAULT_CAP
from .verify import (
    INCONCLUSIVE,
    PRESENTED_CLASSES,
    REFUTED,
    VerifyConfig,
    lemma_suite,
    verify_presentation,
)

EXIT_OK, EXIT_USAGE, EXIT_REFUTED, EXIT_INCONCLUSIVE = 0, 1, 2, 3
STRATEGY_NAMES = {"guess": "GuessProve", "exact": "Exact", "both": "Both"}
ENV_PREFIX = "STARMONOID_"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    ns: list[int]
    classes: list[str]
    strategy: str = "GuessProve"
    limits: SearchLimits = field(default_factory=SearchLimits)
    max_elements: int = DEFAULT_MAX_ELEMENTS
    tc_cap: int = DEFAULT_CAP
    r0_path: str | None = None
    fmt: str = "json"
    output: str | None = None
    seed: int = 0
    jobs: int = 1
    timings: bool = False

    def __post_init__(self):
        if self.max_elements <= 0 or self.tc_cap <= 0 or self.jobs <= 0:
            raise UsageError("caps and --jobs must be positive")


def parse_range(text: str) -> list[int]:
    """``"4"`` or ``"3..5"`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected N or A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_classes(text: str, allowed) -> list[str]:
    if text == "all":
        return list(allowed)
    out = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in out if c not in allowed]
    if bad or not out:
        raise UsageError(f"unknown classes {bad}; choose from {', '.join(allowed)}")
    return out


# -- rendering ----------------------------------------------------------------


def render(rows: list[dict], fmt: str, columns: list[str]) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1, sort_keys=True) + "\n"
    flat = [{c: _cell(r.get(c)) for c in columns} for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, columns, lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        return buf.getvalue()
    widths = {c: max([len(c)] + [len(r[c]) for r in flat]) for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    lines += ["  ".join(r[c].ljust(widths[c]) for c in columns) for r in flat]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))  # map keeps input order


# -- commands ---------------------------------------------------------------------


def _count_row(args) -> dict:
    cls, n, max_elements = args
    formula = card_formula(cls, n)
    generated = len(generate_class(cls, n, max_elements=max_elements))
    predicate = len(predicate_monoid(cls, n))
    ok = formula == generated == predicate
    return {"class": cls, "n": n, "formula": formula, "generated": generated, "predicate": predicate,
            "status": "ok" if ok else "mismatch"}


def cmd_counts(cfg: RunConfig) -> int:
    if min(cfg.ns) < 3:
        raise UsageError("counting commands need n >= 3")
    cells = [(c, n, cfg.max_elements) for n in cfg.ns for c in cfg.classes]
    rows = _map(_count_row, cells, cfg.jobs)
    emit(render(rows, cfg.fmt, ["class", "n", "formula", "generated", "predicate", "status"]), cfg.output)
    return EXIT_OK if all(r["status"] == "ok" for r in rows) else EXIT_REFUTED


def _verify_cell(args) -> dict:
    cls, n, cfg = args
    R0 = load_presentation(cfg.r0_path) if cfg.r0_path else None
    vcfg = VerifyConfig(cfg.limits, cfg.tc_cap, R0)
    v = verify_presentation(cls, n, cfg.strategy, vcfg)
    return v.report(cls=cls, n=n, strategy=cfg.strategy, timings=cfg.timings)


def _exit_for(statuses) -> int:
    if REFUTED in statuses:
        return EXIT_REFUTED
    if INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify_presentation(cfg: RunConfig) -> int:
    if min(cfg.ns) < 4:
        raise UsageError("presentation commands need n >= 4")
    cells = [(c, n, cfg) for n in cfg.ns for c in cfg.classes]
    rows = _map(_verify_cell, cells, cfg.jobs)
    cols = ["class", "n", "strategy", "status", "counts", "failures"] + (["timing_ms"] if cfg.timings else [])
    emit(render(rows, cfg.fmt, cols), cfg.output)
    return _exit_for([r["status"] for r in rows])


def cmd_export(cfg: RunConfig) -> int:
    if len(cfg.classes) != 1 or len(cfg.ns) != 1:
        raise UsageError("export takes exactly one --class and one --n")
    t = generate_class(cfg.classes[0], cfg.ns[0], max_elements=cfg.max_elements)
    text = t.to_json() + "\n" if cfg.fmt == "json" else t.to_csv()
    emit(text, cfg.output)
    return EXIT_OK


def cmd_derive_r0(cfg: RunConfig) -> int:
    if len(cfg.ns) != 1:
        raise UsageError("derive-r0 takes a single --n")
    n = cfg.ns[0]
    if n < 3:
        raise UsageError("derive-r0 needs n >= 3")
    p = derive_presentation(generate_class("PTzeta", n, max_elements=cfg.max_elements), name="R0")
    p.notes.append("machine-derived: nf(s) x = nf(s x) over the non-tree Cayley edges")
    emit(format_presentation(p), cfg.output)
    return EXIT_OK


def cmd_lemmas(cfg: RunConfig, samples: int) -> int:
    if min(cfg.ns) < 4:
        raise UsageError("presentation commands need n >= 4")
    rows = []
    for n in cfg.ns:
        for r in lemma_suite(n, samples, cfg.seed, cfg.limits):
            rows.append({"n": n, **r.row()})
    emit(render(rows, cfg.fmt, ["n", "lemma", "presentation", "result", "lhs", "rhs", "detail"]), cfg.output)
    results = {r["result"] for r in rows}
    if "No" in results:
        return EXIT_REFUTED
    if "Inconclusive" in results:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------------


def _env(name: str, default):
    return os.environ.get(ENV_PREFIX + name.upper(), default)


def build_parser() -> argparse.ArgumentParser:
    lim = SearchLimits()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", default=_env("n", "4"), help="N or A..B (default: %(default)s)")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default=_env("format", "json"),
                        help="report format (default: %(default)s)")
    common.add_argument("-o", "--output", default=_env("output", None), help="write the report to a file")
    common.add_argument("--max-elements", type=int, default=int(_env("max_elements", DEFAULT_MAX_ELEMENTS)),
                        help="cap on enumerated monoid size (default: %(default)s)")
    common.add_argument("--jobs", type=int, default=int(_env("jobs", 1)),
                        help="worker processes across (class, n) cells (default: %(default)s)")
    common.add_argument("--seed", type=int, default=int(_env("seed", 0)),
                        help="seed for sampled checks (default: %(default)s)")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--max-visited", type=int, default=int(_env("max_visited", lim.max_visited)),
                        help="congruence search: words visited per query (default: %(default)s)")
    mwl = _env("max_word_len", None)
    search.add_argument("--max-word-len", type=int, default=int(mwl) if mwl else None,
                        help="congruence search: word length bound (default: longest input plus slack)")
    search.add_argument("--max-rules", type=int, default=int(_env("max_rules", lim.max_rules)),
                        help="Knuth-Bendix rule budget (default: %(default)s)")
    search.add_argument("--tc-cap", type=int, default=int(_env("tc_cap", DEFAULT_CAP)),
                        help="Todd-Coxeter node cap (default: %(default)s)")

    p = _Parser(prog="starmonoid", description="Star graph endomorphism monoids: counts and presentations.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("counts", parents=[common], help="formula vs generated vs predicate sizes")
    c.add_argument("--classes", default=_env("classes", "all"),
                   help=f"comma list or 'all' ({', '.join(GRAPH_CLASSES)}); also {', '.join(MONOID_CLASSES[6:])}")

    v = sub.add_parser("verify-presentation", parents=[common, search], help="verify presentations")
    v.add_argument("--class", dest="cls", default=_env("class", None), help="a single class")
    v.add_argument("--classes", default=_env("classes", None), help=f"comma list or 'all' ({', '.join(PRESENTED_CLASSES)})")
    v.add_argument("--strategy", choices=tuple(STRATEGY_NAMES), default=_env("strategy", "guess"),
                   help="guess = Guess-and-Prove, exact = enumeration, both (default: %(default)s)")
    v.add_argument("--r0", default=_env("r0", None), help="presentation file replacing the default R0")
    v.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical reports)")

    e = sub.add_parser("export", parents=[common], help="dump a monoid's elements and Cayley table")
    e.add_argument("--class", dest="cls", default=_env("class", None), required=_env("class", None) is None)

    sub.add_parser("derive-r0", parents=[common], help="write the Cayley presentation of PT zeta")

    lm = sub.add_parser("lemmas", parents=[common, search], help="run the lemma regression suite")
    lm.add_argument("--samples", type=int, default=int(_env("samples", 20)),
                    help="sampled instances per lemma (default: %(default)s)")
    return p


def config_from(args) -> RunConfig:
    ns = parse_range(args.n)
    cmd = args.command
    if cmd == "counts":
        classes = parse_classes(args.classes, MONOID_CLASSES if args.classes != "all" else GRAPH_CLASSES)
    elif cmd == "verify-presentation":
        if args.cls and args.classes:
            raise UsageError("give --class or --classes, not both")
        chosen = args.cls or args.classes or "all"
        classes = parse_classes(chosen, PRESENTED_CLASSES)
    elif cmd == "export":
        classes = parse_classes(args.cls, MONOID_CLASSES)
    else:
        classes = []
    kw = {}
    if hasattr(args, "max_visited"):
        try:
            kw["limits"] = SearchLimits(max_word_len=args.max_word_len, max_visited=args.max_visited,
                                        max_rules=args.max_rules)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        kw["tc_cap"] = args.tc_cap
    return RunConfig(
        ns=ns,
        classes=classes,
        strategy=STRATEGY_NAMES[args.strategy] if hasattr(args, "strategy") else "GuessProve",
        max_elements=args.max_elements,
        r0_path=getattr(args, "r0", None),
        fmt=args.fmt,
        output=args.output,
        seed=args.seed,
        jobs=args.jobs,
        timings=getattr(args, "timings", False),
        **kw,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from(args)
        if args.command == "counts":
            return cmd_counts(cfg)
        if args.command == "verify-presentation":
            return cmd_verify_presentation(cfg)
        if args.command == "export":
            return cmd_export(cfg)
        if args.command == "derive-r0":
            return cmd_derive_r0(cfg)
        return cmd_lemmas(cfg, args.samples)
    except UsageError as exc:
        print(f"starmonoid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitExceeded, OSError, ValueError) as exc:
        print(f"starmonoid: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
