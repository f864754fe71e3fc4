"""Shared test machinery: random matrices and configurations, plus the
basis-change and reordering transformations used by the invariance tests."""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

from vancoh import (Branch, CurveComponent, IntegerMatrix, IsolatedPoint,
                    SliceConfiguration, SpecialPoint, branch_kernel, validate)
from vancoh.linalg import rank as matrix_rank, solve_in_basis, vstack


def rand_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> IntegerMatrix:
    return IntegerMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)], cols)


def rand_unimodular(rng: random.Random, n: int, bound: int = 3) -> IntegerMatrix:
    """Random determinant +-1 matrix with entries bounded by `bound`,
    built from row swaps, sign flips and bounded shear steps."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(rng.randrange(0, 4 * n + 1)):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 1:
            m[i] = [-x for x in m[i]]
        elif op == 2 and i != j:
            c = rng.choice((-1, 1))
            candidate = [x + c * y for x, y in zip(m[i], m[j])]
            if max(abs(x) for x in candidate) <= bound:
                m[i] = candidate
    return IntegerMatrix.from_rows(m)


def exact_inverse(m: IntegerMatrix) -> IntegerMatrix:
    """Inverse of a unimodular matrix, computed over Q and checked integral."""
    n = m.rows
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m.data)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    out = [[aug[i][n + j] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for row in out for x in row)
    return IntegerMatrix.from_rows([[int(x) for x in row] for row in out])


def random_valid_config(rng: random.Random, max_components: int = 3,
                        max_points: int = 3, max_rank: int = 4,
                        bound: int = 3, with_costalk: bool = False) -> SliceConfiguration:
    """Generate a configuration that passes validation by construction.

    Branch monodromies are reused as the corresponding loop generators, so
    the invariant submodule automatically lies in every branch kernel.
    """
    s = rng.randrange(2, 4)
    n = rng.randrange(3, 6)
    ncomp = rng.randrange(1, max_components + 1)
    ranks = [rng.randrange(1, max_rank + 1) for _ in range(ncomp)]
    genera = [rng.randrange(0, 2) for _ in range(ncomp)]
    ids = [f"S{i + 1}" for i in range(ncomp)]

    npoints = rng.randrange(0, max_points + 1)
    point_branches: list[list[tuple[int, IntegerMatrix]]] = []
    for _ in range(npoints):
        nb = rng.randrange(1, 4)
        slots = []
        for _ in range(nb):
            ci = rng.randrange(ncomp)
            slots.append((ci, rand_unimodular(rng, ranks[ci], bound)))
        point_branches.append(slots)

    components = []
    for i in range(ncomp):
        loops = [rand_unimodular(rng, ranks[i], bound) for _ in range(2 * genera[i])]
        for slots in point_branches:
            loops.extend(mon for ci, mon in slots if ci == i)
        components.append(CurveComponent(ids[i], genera[i], ranks[i], tuple(loops)))

    points = []
    for qi, slots in enumerate(point_branches):
        branches = tuple(Branch(ids[ci], mon) for ci, mon in slots)
        kernel_rows = sum(branch_kernel(b).rank for b in branches)
        fq_low = rng.randrange(0, kernel_rows + 1)
        while True:
            iota = rand_matrix(rng, kernel_rows, fq_low, bound)
            if matrix_rank(iota) == fq_low:
                break
        fq_high = rng.randrange(0, 4)
        costalk = rng.randrange(0, 3) if with_costalk else None
        points.append(SpecialPoint(f"q{qi + 1}", branches, fq_low, fq_high, iota, costalk))

    isolated = tuple(IsolatedPoint(f"r{k + 1}", rng.randrange(0, 5))
                     for k in range(rng.randrange(0, 3)))

    cfg = SliceConfiguration(
        n=n, original_n=n + s - 2, original_s=s,
        components=tuple(components),
        special_points=tuple(points),
        isolated_points=isolated,
    )
    violations = validate(cfg)
    assert not violations, f"generator produced an invalid configuration: {violations}"
    return cfg


def _iota_blocks(q: SpecialPoint) -> list[tuple[Branch, IntegerMatrix]]:
    blocks = []
    row0 = 0
    for b in q.branches:
        r = branch_kernel(b).rank
        block = IntegerMatrix(r, q.iota.cols,
                              tuple(q.iota.data[row0 + i] for i in range(r)))
        blocks.append((b, block))
        row0 += r
    return blocks


def conjugate_component(cfg: SliceConfiguration, component_id: str,
                        u: IntegerMatrix) -> SliceConfiguration:
    """Apply the basis change `u` to one component's transversal module.

    All loop and branch monodromies of the component are conjugated, and the
    affected iota row blocks are rewritten in the new canonical kernel bases.
    The result describes the same geometry in different coordinates.
    """
    u_inv = exact_inverse(u)
    components = tuple(
        replace(c, loop_monodromies=tuple(u * nu * u_inv for nu in c.loop_monodromies))
        if c.id == component_id else c
        for c in cfg.components)

    points = []
    for q in cfg.special_points:
        new_branches = []
        new_blocks = []
        for b, block in _iota_blocks(q):
            if b.component_id != component_id:
                new_branches.append(b)
                new_blocks.append(block)
                continue
            nb = Branch(b.component_id, u * b.monodromy * u_inv)
            old_vectors = branch_kernel(b).basis * block
            coords = solve_in_basis(branch_kernel(nb).basis, u * old_vectors)
            assert coords is not None, "conjugated kernel lost a vector"
            new_branches.append(nb)
            new_blocks.append(coords)
        if new_blocks:
            new_iota = vstack(new_blocks)
        else:
            new_iota = IntegerMatrix.zeros(0, q.fq_rank_low)
        points.append(replace(q, branches=tuple(new_branches), iota=new_iota))
    return replace(cfg, components=components, special_points=tuple(points))


def permute_config(cfg: SliceConfiguration, rng: random.Random) -> SliceConfiguration:
    """Reorder components, special points, branches within each point (with
    the matching iota row-block permutation), and isolated points."""
    components = list(cfg.components)
    rng.shuffle(components)

    points = []
    for q in cfg.special_points:
        blocks = _iota_blocks(q)
        rng.shuffle(blocks)
        branches = tuple(b for b, _ in blocks)
        if blocks:
            iota = vstack([blk for _, blk in blocks])
        else:
            iota = IntegerMatrix.zeros(0, q.fq_rank_low)
        points.append(replace(q, branches=branches, iota=iota))
    rng.shuffle(points)

    isolated = list(cfg.isolated_points)
    rng.shuffle(isolated)

    return replace(cfg, components=tuple(components), special_points=tuple(points),
                   isolated_points=tuple(isolated))


def report_signature(rep) -> tuple:
    """Everything a basis change or reordering must leave unchanged."""
    return (
        rep.lowest_group,
        rep.g_rank,
        tuple(sorted(rep.i0_contribution)),
        tuple(sorted((c.component_id, c.invariants.rank, c.coker, c.euler)
                     for c in rep.components)),
        rep.euler_total,
        (rep.six_term.lowest_pair, rep.six_term.domain, rep.six_term.codomain,
         rep.six_term.top_pair, rep.six_term.middle, rep.six_term.branch_coker,
         rep.six_term.consistent),
        (rep.bounds.upper_lowest, rep.bounds.lower_lowest, rep.bounds.min_bound,
         rep.bounds.betti_high),
    )
