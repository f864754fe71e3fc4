"""Exact linear algebra over the integers.

Dense matrices of arbitrary-precision integers, Smith and Hermite normal
forms, kernels, images, cokernels and lattice intersections.  Everything is
pure and exact: no floats, no modular shortcuts, and every normal form is
canonical, so equal inputs always produce identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .polynomial import IntPolynomial


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable dense integer matrix (row-major tuples of Python ints)."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows in matrix literal")
        else:
            width = 0 if cols is None else cols
        if cols is not None and data and width != cols:
            raise ValueError(f"expected {cols} columns, got {width}")
        return IntegerMatrix(len(data), width, data)

    @staticmethod
    def identity(n: int) -> "IntegerMatrix":
        return IntegerMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntegerMatrix":
        return IntegerMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("matrix data does not match declared shape")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows,
                             tuple(tuple(self.data[i][j] for i in range(self.rows))
                                   for j in range(self.cols)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.data[i][j] for i in range(self.rows))

    def trace(self) -> int:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self.data[i][i] for i in range(self.rows))

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._check_shape(other)
        return IntegerMatrix(self.rows, self.cols,
                             tuple(tuple(a + b for a, b in zip(ra, rb))
                                   for ra, rb in zip(self.data, other.data)))

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._check_shape(other)
        return IntegerMatrix(self.rows, self.cols,
                             tuple(tuple(a - b for a, b in zip(ra, rb))
                                   for ra, rb in zip(self.data, other.data)))

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols,
                             tuple(tuple(-a for a in r) for r in self.data))

    def __mul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        bt = other.transpose().data
        return IntegerMatrix(self.rows, other.cols,
                             tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                                   for row in self.data))

    def _check_shape(self, other: "IntegerMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape mismatch")


def matrix(rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
    """Shorthand constructor from nested row lists."""
    return IntegerMatrix.from_rows(rows, cols)


def hstack(matrices: Iterable[IntegerMatrix]) -> IntegerMatrix:
    ms = list(matrices)
    if not ms:
        raise ValueError("hstack of nothing")
    rows = ms[0].rows
    if any(m.rows != rows for m in ms):
        raise ValueError("hstack row mismatch")
    data = tuple(tuple(x for m in ms for x in m.data[i]) for i in range(rows))
    return IntegerMatrix(rows, sum(m.cols for m in ms), data)


def vstack(matrices: Iterable[IntegerMatrix]) -> IntegerMatrix:
    ms = list(matrices)
    if not ms:
        raise ValueError("vstack of nothing")
    cols = ms[0].cols
    if any(m.cols != cols for m in ms):
        raise ValueError("vstack column mismatch")
    data = tuple(row for m in ms for row in m.data)
    return IntegerMatrix(sum(m.rows for m in ms), cols, data)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

class SNFResult(NamedTuple):
    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _negate_row(a, i):
    a[i] = [-x for x in a[i]]


def _addmul_row(a, dst, src, q):
    # row[dst] += q * row[src]
    rd, rs = a[dst], a[src]
    a[dst] = [x + q * y for x, y in zip(rd, rs)]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _addmul_col(a, dst, src, q):
    for row in a:
        row[dst] += q * row[src]


def _select_pivot(a, t, rows, cols):
    # Smallest absolute nonzero entry in the trailing block, ties broken by
    # lowest row then lowest column: the rule that makes runs reproducible.
    best = None
    for i in range(t, rows):
        ai = a[i]
        for j in range(t, cols):
            x = ai[j]
            if x:
                key = -x if x < 0 else x
                if best is None or key < best[0]:
                    best = (key, i, j)
    return best


def smith_normal_form(m: IntegerMatrix) -> SNFResult:
    """Diagonalize ``m`` as ``u * m * v = d`` by unimodular ``u``, ``v``.

    ``d`` is diagonal with nonnegative entries satisfying the divisibility
    chain d1 | d2 | ... .  Total on all integer matrices, including empty
    ones.  Exact arithmetic throughout; intermediate growth is handled by
    Python's big integers.
    """
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.data]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    t = 0
    while t < rows and t < cols:
        sel = _select_pivot(a, t, rows, cols)
        if sel is None:
            break
        _, pi, pj = sel
        if pi != t:
            _swap_rows(a, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(a, t, pj)
            _swap_cols(v, t, pj)
        if a[t][t] < 0:
            _negate_row(a, t)
            _negate_row(u, t)

        pivot = a[t][t]
        dirty = False
        for i in range(t + 1, rows):
            x = a[i][t]
            if x:
                q = x // pivot
                if q:
                    _addmul_row(a, i, t, -q)
                    _addmul_row(u, i, t, -q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            x = a[t][j]
            if x:
                q = x // pivot
                if q:
                    _addmul_col(a, j, t, -q)
                    _addmul_col(v, j, t, -q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue

        # Pivot must divide the whole trailing block for the divisor chain.
        offender = None
        for i in range(t + 1, rows):
            ai = a[i]
            for j in range(t + 1, cols):
                if ai[j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _addmul_row(a, t, offender, 1)
            _addmul_row(u, t, offender, 1)
            continue
        t += 1

    return SNFResult(
        IntegerMatrix(rows, rows, tuple(tuple(r) for r in u)),
        IntegerMatrix(rows, cols, tuple(tuple(r) for r in a)),
        IntegerMatrix(cols, cols, tuple(tuple(r) for r in v)),
    )


def diagonal_of(d: IntegerMatrix) -> list[int]:
    return [d.data[i][i] for i in range(min(d.rows, d.cols))]


def rank(m: IntegerMatrix) -> int:
    """Rank over the rationals (= number of nonzero Smith invariants)."""
    return sum(1 for x in diagonal_of(smith_normal_form(m).d) if x)


def is_unimodular(m: IntegerMatrix) -> bool:
    """True iff ``m`` is square with determinant +-1."""
    if not m.is_square:
        return False
    return all(x == 1 for x in diagonal_of(smith_normal_form(m).d))


# ---------------------------------------------------------------------------
# Column-style Hermite normal form and submodules
# ---------------------------------------------------------------------------

def hnf_columns(m: IntegerMatrix) -> IntegerMatrix:
    """Canonical basis of the column span of ``m``.

    Column-style Hermite normal form: pivot rows strictly increase with the
    column index, pivots are positive, and in each pivot row the entries of
    earlier columns lie in [0, pivot).  Zero columns are dropped, so the
    result has exactly rank-many columns and is the unique canonical basis
    of the lattice spanned by the columns of ``m``.
    """
    n = m.rows
    live = [(j, list(m.column(j))) for j in range(m.cols)]
    live = [(j, c) for j, c in live if any(c)]
    done: list[list[int]] = []
    for row in range(n):
        # Euclid on the entries of this row until one active column is left.
        while True:
            active = [(j, c) for j, c in live if c[row]]
            if len(active) <= 1:
                break
            _, pc = min(active, key=lambda item: (abs(item[1][row]), item[0]))
            p = pc[row]
            for _, c in active:
                if c is pc:
                    continue
                q = c[row] // p
                if q:
                    for i in range(n):
                        c[i] -= q * pc[i]
            live = [(j, c) for j, c in live if any(c)]
        active = [(j, c) for j, c in live if c[row]]
        if not active:
            continue
        pc = active[0][1]
        if pc[row] < 0:
            for i in range(n):
                pc[i] = -pc[i]
        p = pc[row]
        # Normalize earlier pivots' entries at this row into [0, p).
        for c in done:
            q = c[row] // p
            if q:
                for i in range(n):
                    c[i] -= q * pc[i]
        done.append(pc)
        live = [(j, c) for j, c in live if c is not pc and any(c)]
    data = tuple(tuple(done[j][i] for j in range(len(done))) for i in range(n))
    return IntegerMatrix(n, len(done), data)


@dataclass(frozen=True)
class Submodule:
    """Sublattice of Z^ambient_rank with canonical column-HNF basis.

    Canonicality turns submodule equality into plain matrix equality.
    """

    ambient_rank: int
    basis: IntegerMatrix

    @staticmethod
    def from_columns(ambient_rank: int, columns: IntegerMatrix) -> "Submodule":
        if columns.rows != ambient_rank:
            raise ValueError("column length does not match ambient rank")
        return Submodule(ambient_rank, hnf_columns(columns))

    @staticmethod
    def zero(ambient_rank: int) -> "Submodule":
        return Submodule(ambient_rank, IntegerMatrix.zeros(ambient_rank, 0))

    @staticmethod
    def full(ambient_rank: int) -> "Submodule":
        return Submodule(ambient_rank, IntegerMatrix.identity(ambient_rank))

    def __post_init__(self):
        if self.basis.rows != self.ambient_rank:
            raise ValueError("basis rows must equal ambient rank")

    @property
    def rank(self) -> int:
        return self.basis.cols

    @property
    def is_full(self) -> bool:
        return self.rank == self.ambient_rank and self.basis == IntegerMatrix.identity(self.ambient_rank)


def kernel(m: IntegerMatrix) -> Submodule:
    """Integer kernel {x : m x = 0} of Z^cols, automatically saturated.

    Read off the Smith normal form: columns of v beyond the rank span the
    kernel, and being part of a unimodular basis they span a direct summand.
    """
    snf = smith_normal_form(m)
    r = sum(1 for x in diagonal_of(snf.d) if x)
    kern_cols = IntegerMatrix(m.cols, m.cols - r,
                              tuple(tuple(snf.v.data[i][j] for j in range(r, m.cols))
                                    for i in range(m.cols)))
    return Submodule(m.cols, hnf_columns(kern_cols))


def image(m: IntegerMatrix) -> Submodule:
    """Column span of ``m`` as a canonical submodule of Z^rows."""
    return Submodule(m.rows, hnf_columns(m))


@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group: free rank plus invariant factors.

    ``torsion`` lists the invariant factors d1 | d2 | ... (each >= 2).
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion invariant below 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion invariants must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion


def cokernel(m: IntegerMatrix) -> FinAbGroup:
    """Z^rows / (column span of m), from the Smith invariants."""
    diag = [x for x in diagonal_of(smith_normal_form(m).d) if x]
    return FinAbGroup(m.rows - len(diag), tuple(x for x in diag if x > 1))


def intersect(a: Submodule, b: Submodule) -> Submodule:
    """Lattice intersection via the kernel of the stacked basis matrix."""
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("ambient rank mismatch in intersection")
    if a.rank == 0 or b.rank == 0:
        return Submodule.zero(a.ambient_rank)
    stacked = hstack([a.basis, -b.basis])
    k = kernel(stacked).basis  # (a.rank + b.rank) x d
    coeffs = IntegerMatrix(a.rank, k.cols,
                           tuple(k.data[i] for i in range(a.rank)))
    return Submodule(a.ambient_rank, hnf_columns(a.basis * coeffs))


def solve_in_basis(basis: IntegerMatrix, targets: IntegerMatrix) -> IntegerMatrix | None:
    """Integer coordinates of each target column in a column-HNF basis.

    Returns the coefficient matrix c with basis * c = targets, or None when
    some target is not an integral combination of the basis columns.
    """
    if basis.rows != targets.rows:
        raise ValueError("row mismatch between basis and targets")
    pivots = []
    seen = -1
    for j in range(basis.cols):
        col = basis.column(j)
        prow = next((i for i, x in enumerate(col) if x), None)
        if prow is None or prow <= seen:
            raise ValueError("basis is not in column Hermite normal form")
        pivots.append(prow)
        seen = prow
    out_cols = []
    for jt in range(targets.cols):
        residual = list(targets.column(jt))
        coeffs = []
        for j, prow in enumerate(pivots):
            p = basis.data[prow][j]
            q, r = divmod(residual[prow], p)
            if r:
                return None
            coeffs.append(q)
            if q:
                for i in range(basis.rows):
                    residual[i] -= q * basis.data[i][j]
        if any(residual):
            return None
        out_cols.append(coeffs)
    data = tuple(tuple(out_cols[j][i] for j in range(targets.cols)) for i in range(basis.cols))
    return IntegerMatrix(basis.cols, targets.cols, data)


# ---------------------------------------------------------------------------
# Characteristic polynomial
# ---------------------------------------------------------------------------

def char_poly(m: IntegerMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(t I - m), exact coefficients.

    Faddeev-LeVerrier recursion; every division is exact over the integers.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return IntPolynomial((1,))
    coeffs = [0] * (n + 1)
    coeffs[n] = 1  # leading coefficient of t^n
    mk = m
    c = -mk.trace()
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        mk = m * (mk + _scalar(n, c))
        c = -mk.trace() // k
        coeffs[n - k] = c
    return IntPolynomial(tuple(coeffs))


def _scalar(n: int, c: int) -> IntegerMatrix:
    return IntegerMatrix(n, n, tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n)))
