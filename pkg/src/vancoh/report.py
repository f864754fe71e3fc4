"""Deterministic report construction and rendering.

Reports are pure data derived from the input bytes alone, so equal inputs
produce byte-identical serialized reports regardless of file path.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from . import __version__
from .engine import VanishingReport
from .linalg import FinAbGroup, IntegerMatrix
from .model import Violation

MATRIX_PRINT_LIMIT = 12  # larger literals are suppressed unless verbose


def format_group(g: FinAbGroup) -> str:
    """Canonical text for a finitely generated abelian group.

    "0" for the trivial group, "Z^r" for free, and torsion factors appended
    in divisibility-chain order; a zero free part is omitted.
    """
    if g.is_trivial:
        return "0"
    parts = []
    if g.free_rank:
        parts.append(f"Z^{g.free_rank}")
    parts.extend(f"Z/{d}" for d in g.torsion)
    return " (+) ".join(parts)


def input_digest(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()


@dataclass(frozen=True)
class Report:
    """Outcome for one configuration document."""

    configuration_id: str
    validation: tuple[Violation, ...]
    vanishing: VanishingReport | None
    defect: str | None = None
    warnings: tuple[str, ...] = ()
    input_sha256: str = ""

    def __post_init__(self):
        if self.validation and self.vanishing is not None:
            raise ValueError("a report with violations must not carry results")


def _group_dict(g: FinAbGroup) -> dict:
    return {"free_rank": g.free_rank, "torsion": list(g.torsion), "text": format_group(g)}


def _matrix_entry(m: IntegerMatrix, verbose: bool):
    if verbose or (m.rows <= MATRIX_PRINT_LIMIT and m.cols <= MATRIX_PRINT_LIMIT):
        return m.tolist()
    return f"suppressed ({m.rows}x{m.cols}; rerun with --verbose)"


def _vanishing_dict(v: VanishingReport, verbose: bool) -> dict:
    six = v.six_term
    out = {
        "lowest_group": _group_dict(v.lowest_group),
        "lowest_degree": v.lowest_degree,
        "original_degree": v.original_degree,
        "g_rank": v.g_rank,
        "i0_contribution": [[cid, r] for cid, r in v.i0_contribution],
        "components": [
            {
                "id": c.component_id,
                "invariant_rank": c.invariants.rank,
                "invariant_basis": _matrix_entry(c.invariants.basis, verbose),
                "coker": _group_dict(c.coker),
                "euler": c.euler,
            }
            for c in v.components
        ],
        "euler_total": v.euler_total,
        "six_term": {
            "lowest_pair": six.lowest_pair,
            "domain": six.domain,
            "codomain": six.codomain,
            "top_pair": six.top_pair,
            "middle": six.middle,
            "branch_coker": six.branch_coker,
            "consistent": six.consistent,
            "top_pair_torsion": "undetermined extension",
        },
        "bounds": {
            "upper_lowest": v.bounds.upper_lowest,
            "lower_lowest": v.bounds.lower_lowest,
            "min_bound": v.bounds.min_bound,
            "betti_high": v.bounds.betti_high,
            "polar": [[k, b] for k, b in v.bounds.polar],
        },
        "j_matrix": _matrix_entry(v.j_matrix, verbose),
        "shortcut_agrees": v.shortcut_agrees,
    }
    if v.monodromy is not None:
        out["monodromy_checks"] = {
            "char_poly_divides": v.monodromy.char_poly_divides,
            "eigen_dims": {label: ok for label, ok in v.monodromy.eigen_dims_ok},
            "jordan_sizes": {label: ok for label, ok in v.monodromy.jordan_sizes_ok},
        }
    return out


def report_to_dict(report: Report, verbose: bool = False) -> dict:
    out: dict = {
        "configuration_id": report.configuration_id,
        "validation": [v.as_dict() for v in report.validation],
        "provenance": {"tool": "vancoh", "version": __version__,
                       "input_sha256": report.input_sha256},
    }
    if report.warnings:
        out["warnings"] = list(report.warnings)
    if report.defect is not None:
        out["defect"] = report.defect
    if report.vanishing is not None:
        out["vanishing"] = _vanishing_dict(report.vanishing, verbose)
    return out


def render_json(reports: list[Report], verbose: bool = False) -> str:
    docs = [report_to_dict(r, verbose) for r in reports]
    return json.dumps(docs, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def render_text(report: Report, verbose: bool = False) -> str:
    lines = [f"configuration {report.configuration_id}"]
    if report.warnings:
        for w in report.warnings:
            lines.append(f"  warning: unknown key {w}")
    if report.validation:
        lines.append("  INVALID")
        for v in report.validation:
            detail = f": {v.detail}" if v.detail else ""
            lines.append(f"    {v.code} [{v.subject}]{detail}")
        return "\n".join(lines) + "\n"
    if report.defect is not None:
        lines.append(f"  DEFECT: {report.defect}")
        return "\n".join(lines) + "\n"
    v = report.vanishing
    if v is None:  # validate-only run
        lines.append("  valid")
        return "\n".join(lines) + "\n"
    six = v.six_term
    lines.append(f"  lowest vanishing group (degree {v.lowest_degree} sliced, "
                 f"{v.original_degree} original): {format_group(v.lowest_group)}")
    lines.append(f"  decomposition: interaction rank {v.g_rank}"
                 + (f", branch-free components "
                    + ", ".join(f"{cid}:{r}" for cid, r in v.i0_contribution)
                    if v.i0_contribution else ""))
    for c in v.components:
        lines.append(f"  component {c.component_id}: invariant rank {c.invariants.rank}, "
                     f"coker {format_group(c.coker)}, euler {c.euler}")
    lines.append(f"  euler characteristic of the vanishing neighborhood: {v.euler_total}")
    lines.append(f"  six-term ranks: lowest {six.lowest_pair}, domain {six.domain}, "
                 f"codomain {six.codomain}, top {six.top_pair} (torsion undetermined), "
                 f"middle {six.middle}, branch coker {six.branch_coker}"
                 f"{' [consistent]' if six.consistent else ' [INCONSISTENT]'}")
    lower = "absent" if v.bounds.lower_lowest is None else str(v.bounds.lower_lowest)
    lines.append(f"  bounds: lowest betti in [{lower}, {v.bounds.upper_lowest}], "
                 f"concentration bound {v.bounds.min_bound}, "
                 f"next betti <= {v.bounds.betti_high}")
    for k, b in v.bounds.polar:
        lines.append(f"  polar bound: b_(n-{k})(F) <= {b}")
    if v.monodromy is not None:
        lines.append(f"  char poly divides component product: {v.monodromy.char_poly_divides}")
        for label, ok in v.monodromy.eigen_dims_ok:
            lines.append(f"  eigenspace bound at {label}: {ok}")
        for label, ok in v.monodromy.jordan_sizes_ok:
            lines.append(f"  jordan bound at {label}: {ok}")
    if v.shortcut_agrees is not None:
        lines.append(f"  no-special-point shortcut agrees: {v.shortcut_agrees}")
    jm = _matrix_entry(v.j_matrix, verbose)
    if isinstance(jm, list):
        lines.append(f"  j matrix ({v.j_matrix.rows}x{v.j_matrix.cols}):")
        for row in jm:
            lines.append("    [" + " ".join(f"{x:3d}" for x in row) + "]")
    else:
        lines.append(f"  j matrix: {jm}")
    return "\n".join(lines) + "\n"
