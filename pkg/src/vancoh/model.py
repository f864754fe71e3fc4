"""Data model for the sliced singular-locus configuration.

A configuration describes, after iterated generic hyperplane slicing down to
a two-dimensional singular locus: the curve components of the sliced locus
(with genus, transversal rank and vertical monodromy generators), the
special points where one-dimensional strata meet the curve (with local
branches, local Milnor-fiber Betti ranks and the injection into the branch
kernels), and the isolated singular points of the slice.

Configurations are immutable; `validate` returns violations as data.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .linalg import IntegerMatrix, Submodule
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class Branch:
    """Local branch of a curve component at a special point."""

    component_id: str
    monodromy: IntegerMatrix


@dataclass(frozen=True)
class CurveComponent:
    """Irreducible curve of the sliced locus.

    `transversal_rank` is the rank of the middle cohomology of the
    transversal Milnor fiber; `loop_monodromies` are the user's matrices for
    the vertical monodromy representation, one per generating loop
    (2*genus + total branch count, enforced at configuration level).
    """

    id: str
    genus: int
    transversal_rank: int
    loop_monodromies: tuple[IntegerMatrix, ...]


@dataclass(frozen=True)
class SpecialPoint:
    """Intersection point of the sliced curve with a 1-dimensional stratum.

    `iota` is the matrix of the injection of the local Milnor fiber's lower
    cohomology into the direct sum of branch kernels, written in the
    engine's canonical Hermite bases of ker(monodromy - id), branch blocks
    in declaration order.
    """

    id: str
    branches: tuple[Branch, ...]
    fq_rank_low: int
    fq_rank_high: int
    iota: IntegerMatrix
    costalk_rank: int | None = None


@dataclass(frozen=True)
class IsolatedPoint:
    id: str
    milnor_number: int


@dataclass(frozen=True)
class EigenvalueData:
    """Per-eigenvalue integers for the monodromy predicates (label is opaque)."""

    eigenvalue: str
    total: int
    components: tuple[int, ...]


@dataclass(frozen=True)
class MonodromyData:
    char_poly: IntPolynomial
    component_char_polys: tuple[IntPolynomial, ...]
    eigen_dims: tuple[EigenvalueData, ...] = ()
    jordan_sizes: tuple[EigenvalueData, ...] = ()


@dataclass(frozen=True)
class SliceConfiguration:
    """Complete validated input; root of every engine computation."""

    n: int
    original_n: int
    original_s: int
    components: tuple[CurveComponent, ...]
    special_points: tuple[SpecialPoint, ...]
    isolated_points: tuple[IsolatedPoint, ...] = ()
    polar_data: tuple[tuple[int, int], ...] | None = None
    monodromy_data: MonodromyData | None = None

    def component_ids(self) -> list[str]:
        return [c.id for c in self.components]

    def branch_count(self, component_id: str) -> int:
        return sum(1 for q in self.special_points for b in q.branches
                   if b.component_id == component_id)

    def points_of_component(self, component_id: str) -> list[SpecialPoint]:
        return [q for q in self.special_points
                if any(b.component_id == component_id for b in q.branches)]


@dataclass(frozen=True)
class Violation:
    """One violated invariant: machine-readable code plus the offending id."""

    code: str
    subject: str
    detail: str = ""

    def as_dict(self) -> dict:
        return {"code": self.code, "subject": self.subject, "detail": self.detail}


def slice_degree_map(original_n: int, original_s: int) -> tuple[int, int]:
    """Ambient dimension after slicing to a surface locus, and the degree of
    the cohomology group being computed in the unsliced germ.

    Requires original_n > original_s >= 2.
    """
    if original_s < 2 or original_n <= original_s:
        raise ValueError(f"need original_n > original_s >= 2, got ({original_n}, {original_s})")
    return original_n - original_s + 2, original_n - original_s


def branch_kernel(b: Branch) -> Submodule:
    """Kernel of (monodromy - id), in canonical Hermite basis.

    This basis is the coordinate system for the corresponding iota rows.
    """
    nu = b.monodromy
    return linalg.kernel(nu - IntegerMatrix.identity(nu.rows))


def _check_monodromy(m: IntegerMatrix, size: int, subject: str, kind: str,
                     out: list[Violation]) -> None:
    if m.rows != size or m.cols != size:
        out.append(Violation(f"{kind}-shape", subject,
                             f"expected {size}x{size}, got {m.rows}x{m.cols}"))
        return
    if not linalg.is_unimodular(m):
        out.append(Violation(f"{kind}-not-unimodular", subject,
                             "monodromy must be an automorphism (determinant +-1)"))


def validate(cfg: SliceConfiguration) -> list[Violation]:
    """Every violated invariant of the configuration, in deterministic order.

    An empty list means the configuration is valid; a valid configuration is
    safe input for every engine operation.
    """
    out: list[Violation] = []

    if cfg.original_s < 2:
        out.append(Violation("dimension-range", "original_s", "original_s must be >= 2"))
    if cfg.original_n <= cfg.original_s:
        out.append(Violation("dimension-range", "original_n", "original_n must exceed original_s"))
    if cfg.n != cfg.original_n - cfg.original_s + 2:
        out.append(Violation("dimension-reduction", "n",
                             f"n must equal original_n - original_s + 2 = "
                             f"{cfg.original_n - cfg.original_s + 2}, got {cfg.n}"))
    if cfg.n < 3:
        out.append(Violation("dimension-range", "n", "reduced dimension n must be >= 3"))

    seen: set[str] = set()
    for ident in ([c.id for c in cfg.components]
                  + [q.id for q in cfg.special_points]
                  + [r.id for r in cfg.isolated_points]):
        if ident in seen:
            out.append(Violation("duplicate-id", ident, "identifiers must be unique"))
        seen.add(ident)

    by_id = {c.id: c for c in cfg.components}

    for c in cfg.components:
        if c.genus < 0:
            out.append(Violation("negative-genus", c.id, "genus must be nonnegative"))
        if c.transversal_rank < 1:
            out.append(Violation("transversal-rank", c.id, "transversal rank must be positive"))
            continue
        for w, nu in enumerate(c.loop_monodromies):
            _check_monodromy(nu, c.transversal_rank, f"{c.id}[loop {w}]", "loop", out)
        expected = 2 * c.genus + cfg.branch_count(c.id)
        if len(c.loop_monodromies) != expected:
            out.append(Violation("loop-count", c.id,
                                 f"expected 2*genus + branches = {expected} loop monodromies, "
                                 f"got {len(c.loop_monodromies)}"))

    for q in cfg.special_points:
        if q.fq_rank_low < 0 or q.fq_rank_high < 0:
            out.append(Violation("negative-rank", q.id, "Betti ranks must be nonnegative"))
            continue
        if q.costalk_rank is not None and q.costalk_rank < 0:
            out.append(Violation("negative-rank", q.id, "costalk rank must be nonnegative"))
        kernel_rows = 0
        branches_ok = True
        for k, b in enumerate(q.branches):
            owner = by_id.get(b.component_id)
            if owner is None:
                out.append(Violation("unknown-component", f"{q.id}[branch {k}]",
                                     f"branch references unknown component {b.component_id!r}"))
                branches_ok = False
                continue
            before = len(out)
            _check_monodromy(b.monodromy, owner.transversal_rank, f"{q.id}[branch {k}]", "branch", out)
            if len(out) != before:
                branches_ok = False
                continue
            kernel_rows += branch_kernel(b).rank
        if not branches_ok:
            continue
        if q.iota.rows != kernel_rows or q.iota.cols != q.fq_rank_low:
            out.append(Violation("iota-shape", q.id,
                                 f"iota must be {kernel_rows}x{q.fq_rank_low} "
                                 f"(sum of branch-kernel ranks by fq_rank_low), "
                                 f"got {q.iota.rows}x{q.iota.cols}"))
            continue
        if linalg.rank(q.iota) != q.fq_rank_low:
            out.append(Violation("iota-not-injective", q.id,
                                 "iota must have full column rank"))

    for r in cfg.isolated_points:
        if r.milnor_number < 0:
            out.append(Violation("negative-rank", r.id, "Milnor number must be nonnegative"))

    if cfg.polar_data is not None:
        if len(cfg.polar_data) > cfg.original_s:
            out.append(Violation("polar-length", "polar_data",
                                 f"at most original_s = {cfg.original_s} pairs are "
                                 f"meaningful (k = 0..s-1), got {len(cfg.polar_data)}"))
        for k, (lam, clk) in enumerate(cfg.polar_data):
            if lam < 0 or clk < 0:
                out.append(Violation("polar-negative", f"polar_data[{k}]",
                                     "polar multiplicities and complex-link Betti numbers "
                                     "must be nonnegative"))

    md = cfg.monodromy_data
    if md is not None:
        if md.char_poly.is_zero:
            out.append(Violation("zero-polynomial", "monodromy_data.char_poly",
                                 "characteristic polynomial must be nonzero"))
        for i, p in enumerate(md.component_char_polys):
            if p.is_zero:
                out.append(Violation("zero-polynomial", f"monodromy_data.component_char_polys[{i}]",
                                     "characteristic polynomial must be nonzero"))
        if len(md.component_char_polys) != len(cfg.components):
            out.append(Violation("char-poly-count", "monodromy_data",
                                 f"need one per-component polynomial per component "
                                 f"({len(cfg.components)}), got {len(md.component_char_polys)}"))
        for kind, entries in (("eigen_dims", md.eigen_dims), ("jordan_sizes", md.jordan_sizes)):
            for e in entries:
                if e.total < 0 or any(x < 0 for x in e.components):
                    out.append(Violation("negative-rank", f"monodromy_data.{kind}[{e.eigenvalue}]",
                                         "eigenvalue integers must be nonnegative"))
                if len(e.components) != len(cfg.components):
                    out.append(Violation("eigenvalue-count", f"monodromy_data.{kind}[{e.eigenvalue}]",
                                         f"need one integer per component ({len(cfg.components)}), "
                                         f"got {len(e.components)}"))

    return out
