"""Command line: validate or compute configuration files, run the corpus.

Exit status: 0 when every input is valid and all internal checks pass, 1 on
any validation failure (including unreadable or malformed files), 2 on an
internal defect.
"""

from __future__ import annotations

import argparse
import sys

from . import corpus
from .engine import InternalDefectError, analyze
from .loader import load_path
from .model import Violation, validate
from .report import Report, format_group, input_digest, render_json, render_text


def _file_report(path: str, *, strict: bool, costalk_required: bool,
                 compute: bool) -> Report:
    # Reports stay a pure function of the input bytes: no paths inside, so
    # equal documents serialize identically wherever they live.
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        return Report("unreadable",
                      (Violation("unreadable-file", "document",
                                 exc.strerror or "cannot read"),), None)
    digest = input_digest(raw)
    cid = digest[:12]
    result, error = load_path(path)
    if error is not None:
        return Report(cid, (Violation("malformed-document", "document", error),), None,
                      input_sha256=digest)
    assert result is not None
    violations = list(result.violations)
    warnings: tuple[str, ...] = ()
    if result.unknown_keys:
        if strict:
            violations.extend(Violation("unknown-key", key, "unknown key in strict mode")
                              for key in result.unknown_keys)
        else:
            warnings = tuple(result.unknown_keys)
    cfg = result.configuration
    if cfg is not None and not violations:
        violations.extend(validate(cfg))
        if costalk_required and not violations:
            for q in cfg.special_points:
                if q.costalk_rank is None:
                    violations.append(Violation(
                        "missing-costalk", q.id,
                        "lower bound requested but costalk rank is absent"))
    if violations or cfg is None:
        return Report(cid, tuple(violations), None, warnings=warnings, input_sha256=digest)
    if not compute:
        return Report(cid, (), None, warnings=warnings, input_sha256=digest)
    try:
        vanishing = analyze(cfg)
    except InternalDefectError as exc:
        return Report(cid, (), None, defect=str(exc), warnings=warnings, input_sha256=digest)
    return Report(cid, (), vanishing, warnings=warnings, input_sha256=digest)


def run(paths: list[str], *, compute: bool = True, strict: bool = False,
        costalk_required: bool = False) -> tuple[list[Report], int]:
    """Process the inputs in order; one report per path.

    Status 0 iff all valid (and computed cleanly), 1 on validation failure,
    2 on internal defect.
    """
    reports = [_file_report(p, strict=strict, costalk_required=costalk_required,
                            compute=compute) for p in paths]
    status = 0
    if any(r.validation for r in reports):
        status = 1
    if any(r.defect is not None for r in reports):
        status = 2
    return reports, status


def _emit(reports: list[Report], fmt: str, verbose: bool) -> None:
    if fmt == "json":
        sys.stdout.write(render_json(reports, verbose))
    else:
        for r in reports:
            sys.stdout.write(render_text(r, verbose))


def _run_corpus(fmt: str, verbose: bool) -> int:
    entries = corpus.bundled()
    reports, status = run([str(p) for _, p in entries], compute=True)
    failures = []
    for (name, path), report in zip(entries, reports):
        expected = corpus.EXPECTED[name]
        if report.vanishing is None:
            failures.append(f"{name}: no result ({'defect' if report.defect else 'invalid'})")
            continue
        got_group = format_group(report.vanishing.lowest_group)
        six = report.vanishing.six_term
        got = {"group": got_group, "domain": six.domain, "codomain": six.codomain,
               "kernel": six.lowest_pair, "upper": report.vanishing.bounds.upper_lowest}
        bad = {k: (got[k], expected[k]) for k in expected if got[k] != expected[k]}
        if bad:
            failures.append(f"{name}: mismatch {bad}")
        else:
            print(f"corpus {name}: ok ({got_group})")
    for f in failures:
        print(f"corpus FAILURE {f}")
    if fmt == "json" or verbose:
        _emit(reports, fmt, verbose)
    if failures:
        return 1
    return status


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="vancoh",
        description="Lowest vanishing cohomology of a non-isolated hypersurface "
                    "singularity germ from its sliced singular-locus data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--strict", action="store_true",
                       help="treat unknown document keys as fatal")
        p.add_argument("--costalk-required", action="store_true",
                       help="fail when the lower bound cannot be computed")
        p.add_argument("--verbose", action="store_true",
                       help="print matrix literals regardless of size")

    p_validate = sub.add_parser("validate", help="validate configuration files")
    add_common(p_validate)
    p_validate.add_argument("paths", nargs="+")

    p_compute = sub.add_parser("compute", help="validate and compute reports")
    add_common(p_compute)
    p_compute.add_argument("paths", nargs="+")

    p_corpus = sub.add_parser("corpus", help="run the bundled examples against "
                                             "their expected values")
    add_common(p_corpus)

    args = parser.parse_args(argv)

    if args.command == "corpus":
        return _run_corpus(args.format, args.verbose)

    compute = args.command == "compute"
    reports, status = run(args.paths, compute=compute, strict=args.strict,
                          costalk_required=args.costalk_required)
    _emit(reports, args.format, args.verbose)
    return status


if __name__ == "__main__":
    sys.exit(main())
