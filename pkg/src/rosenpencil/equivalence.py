"""Unimodular witnesses that certify Fiedler pencils as linearizations.

Two companion recursions produce, step by step, a left witness sequence and
a right witness sequence of block matrix polynomials.  Their final elements
U and V satisfy, for the pencil L of the same decision sequence,

    U(z) L(z) V(z) = [[I, 0, 0, 0], [0, A(z), 0, -B], [0, 0, I, 0], [0, C, 0, D(z)]]

at every z, with the identity paddings sized (d_A - 1)n and
p*c0 + m*i0 (counts over the decisions that grew the feedthrough side).
All witnesses are unimodular with determinant +-1.  Verification here is
sample-based: a polynomial identity of bounded degree is certified by
agreement at more than degree-many random points plus a holdout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._gridops import Grid, splice
from .blocks import Pencil, PolyBlockMatrix
from .errors import DimensionError
from .polycore import MatrixPolynomial
from .rsmp import Rsmp
from .sigma import SigmaSeq

__all__ = [
    "build_n_sequence",
    "build_h_sequence",
    "unimodular_pair",
    "linearization_with_witnesses",
    "verify_theorem",
    "system_equivalence_check",
    "sample_points",
    "is_unimodular",
    "EquivalenceReport",
]


# -- small matrix-polynomial helpers (internal) -----------------------------


def _mp_zero(rows: int, cols: int) -> MatrixPolynomial:
    return MatrixPolynomial.zero(rows, cols)


def _mp_eye(k: int) -> MatrixPolynomial:
    return MatrixPolynomial.identity(k)


def _mp_const(m) -> MatrixPolynomial:
    return MatrixPolynomial.constant(m)


def _lam(p: MatrixPolynomial) -> MatrixPolynomial:
    """Multiply by lambda (shift coefficients up one degree)."""
    z = np.zeros((1, p.rows, p.cols), dtype=complex)
    return MatrixPolynomial(np.concatenate([z, p.coeffs]))


def _mul(p: MatrixPolynomial, q: MatrixPolynomial) -> MatrixPolynomial:
    """Matrix product with polynomial entries (coefficient convolution)."""
    if p.cols != q.rows:
        raise DimensionError(f"cannot multiply {p.shape} by {q.shape}")
    out = np.zeros((p.degree + q.degree + 1, p.rows, q.cols), dtype=complex)
    for a in range(p.degree + 1):
        for b in range(q.degree + 1):
            out[a + b] += p.coeffs[a] @ q.coeffs[b]
    return MatrixPolynomial(out)


def _neg(p: MatrixPolynomial) -> MatrixPolynomial:
    return MatrixPolynomial(-p.coeffs)


# -- seeds -------------------------------------------------------------------


def _n_seed(r: Rsmp, consec: bool) -> Grid:
    n, p, m = r.n, r.p, r.m
    pa = r.A.horner_shift(r.d_a - 1)
    if r.d_a >= r.d_d:
        if r.d_d == 1:
            if consec:
                cells = [
                    [_mp_eye(n), _mp_zero(n, n), _mp_zero(n, p)],
                    [_lam(_mp_eye(n)), _mp_eye(n), _mp_zero(n, p)],
                    [_mp_zero(p, n), _mp_zero(p, n), _mp_eye(p)],
                ]
            else:
                cells = [
                    [_mp_zero(n, n), _neg(_mp_eye(n)), _mp_zero(n, p)],
                    [_mp_eye(n), pa, _mp_zero(n, p)],
                    [_mp_zero(p, n), _mp_zero(p, n), _mp_eye(p)],
                ]
            return Grid(cells, [n, n, p], [n, n, p], 2, 2)
    elif r.d_a == 1:
        qd = r.D.horner_shift(r.d_d - 1)
        if consec:
            cells = [
                [_mp_eye(n), _mp_zero(n, p), _mp_zero(n, p)],
                [_mp_zero(p, n), _mp_eye(p), _mp_zero(p, p)],
                [_mp_zero(p, n), _lam(_mp_eye(p)), _mp_eye(p)],
            ]
            return Grid(cells, [n, p, p], [n, p, p], 1, 1)
        cells = [
            [_mp_eye(n), _mp_zero(n, p), _mp_zero(n, m)],
            [_mp_zero(m, n), _mp_zero(m, p), _neg(_mp_eye(m))],
            [_mp_zero(p, n), _mp_eye(p), qd],
        ]
        return Grid(cells, [n, m, p], [n, p, m], 1, 1)

    qd = r.D.horner_shift(r.d_d - 1)
    if consec:
        cells = [
            [_mp_eye(n), _mp_zero(n, n), _mp_zero(n, p), _mp_zero(n, p)],
            [_lam(_mp_eye(n)), _mp_eye(n), _mp_zero(n, p), _mp_zero(n, p)],
            [_mp_zero(p, n), _mp_zero(p, n), _mp_eye(p), _mp_zero(p, p)],
            [_mp_zero(p, n), _mp_zero(p, n), _lam(_mp_eye(p)), _mp_eye(p)],
        ]
        return Grid(cells, [n, n, p, p], [n, n, p, p], 2, 2)
    cells = [
        [_mp_zero(n, n), _neg(_mp_eye(n)), _mp_zero(n, p), _mp_zero(n, m)],
        [_mp_eye(n), pa, _mp_zero(n, p), _mp_zero(n, m)],
        [_mp_zero(m, n), _mp_zero(m, n), _mp_zero(m, p), _neg(_mp_eye(m))],
        [_mp_zero(p, n), _mp_zero(p, n), _mp_eye(p), qd],
    ]
    return Grid(cells, [n, n, m, p], [n, n, p, m], 2, 2)


def _h_seed(r: Rsmp, consec: bool) -> Grid:
    n, p, m = r.n, r.p, r.m
    pa = r.A.horner_shift(r.d_a - 1)
    if r.d_a >= r.d_d:
        if r.d_d == 1:
            if consec:
                cells = [
                    [_mp_zero(n, n), _mp_eye(n), _mp_zero(n, m)],
                    [_neg(_mp_eye(n)), pa, _mp_zero(n, m)],
                    [_mp_zero(m, n), _mp_zero(m, n), _mp_eye(m)],
                ]
            else:
                cells = [
                    [_mp_eye(n), _lam(_mp_eye(n)), _mp_zero(n, m)],
                    [_mp_zero(n, n), _mp_eye(n), _mp_zero(n, m)],
                    [_mp_zero(m, n), _mp_zero(m, n), _mp_eye(m)],
                ]
            return Grid(cells, [n, n, m], [n, n, m], 2, 2)
    elif r.d_a == 1:
        qd = r.D.horner_shift(r.d_d - 1)
        if consec:
            cells = [
                [_mp_eye(n), _mp_zero(n, p), _mp_zero(n, m)],
                [_mp_zero(m, n), _mp_zero(m, p), _mp_eye(m)],
                [_mp_zero(p, n), _neg(_mp_eye(p)), qd],
            ]
            return Grid(cells, [n, m, p], [n, p, m], 1, 1)
        cells = [
            [_mp_eye(n), _mp_zero(n, m), _mp_zero(n, m)],
            [_mp_zero(m, n), _mp_eye(m), _lam(_mp_eye(m))],
            [_mp_zero(m, n), _mp_zero(m, m), _mp_eye(m)],
        ]
        return Grid(cells, [n, m, m], [n, m, m], 1, 1)

    qd = r.D.horner_shift(r.d_d - 1)
    if consec:
        cells = [
            [_mp_zero(n, n), _mp_eye(n), _mp_zero(n, p), _mp_zero(n, m)],
            [_neg(_mp_eye(n)), pa, _mp_zero(n, p), _mp_zero(n, m)],
            [_mp_zero(m, n), _mp_zero(m, n), _mp_zero(m, p), _mp_eye(m)],
            [_mp_zero(p, n), _mp_zero(p, n), _neg(_mp_eye(p)), qd],
        ]
        return Grid(cells, [n, n, m, p], [n, n, p, m], 2, 2)
    cells = [
        [_mp_eye(n), _lam(_mp_eye(n)), _mp_zero(n, m), _mp_zero(n, m)],
        [_mp_zero(n, n), _mp_eye(n), _mp_zero(n, m), _mp_zero(n, m)],
        [_mp_zero(m, n), _mp_zero(m, n), _mp_eye(m), _lam(_mp_eye(m))],
        [_mp_zero(m, n), _mp_zero(m, n), _mp_zero(m, m), _mp_eye(m)],
    ]
    return Grid(cells, [n, n, m, m], [n, n, m, m], 2, 2)


# -- recursion steps ---------------------------------------------------------


def _n_mixed_step(g: Grid, consec: bool, pa: MatrixPolynomial, qd: MatrixPolynomial, n, p, m) -> Grid:
    ar, ac = g.a_r, g.a_c
    if consec:
        row_map = [k + 1 if k < ar else k + 2 for k in range(g.nrows)]
        new_rsz = [n] + g.rsz[:ar] + [p] + g.rsz[ar:]
        col_map = [j + 1 if j < ac else j + 2 for j in range(g.ncols)]
        new_csz = [n] + g.csz[:ac] + [p] + g.csz[ac:]
        extra = [(0, 0, _mp_eye(n)), (ar + 1, ac + 1, _mp_eye(p))]
        for k in range(ar):
            extra.append((k + 1, 0, _lam(g.cells[k][0])))
        for k in range(ar, g.nrows):
            extra.append((k + 2, ac + 1, _lam(g.cells[k][ac])))
    else:
        row_map = [k + 1 if k < ar else k + 2 for k in range(g.nrows)]
        new_rsz = [n] + g.rsz[:ar] + [m] + g.rsz[ar:]
        col_map = (
            [0]
            + [j + 1 for j in range(1, ac + 1)]
            + [j + 2 for j in range(ac + 1, g.ncols)]
        )
        new_csz = [g.csz[0], n] + g.csz[1 : ac + 1] + [m] + g.csz[ac + 1 :]
        extra = [(0, 1, _neg(_mp_eye(n))), (ar + 1, ac + 2, _neg(_mp_eye(m)))]
        for k in range(ar):
            extra.append((k + 1, 1, _mul(g.cells[k][0], pa)))
        for k in range(ar, g.nrows):
            extra.append((k + 2, ac + 2, _mul(g.cells[k][ac], qd)))
    return splice(g, row_map, new_rsz, col_map, new_csz, extra, _mp_zero, ar + 1, ac + 1)


def _n_state_step(g: Grid, consec: bool, pa: MatrixPolynomial, n) -> Grid:
    if consec:
        row_map = [k + 1 for k in range(g.nrows)]
        new_rsz = [n] + g.rsz
        col_map = [j + 1 for j in range(g.ncols)]
        new_csz = [n] + g.csz
        extra = [(0, 0, _mp_eye(n))]
        for k in range(g.nrows):
            extra.append((k + 1, 0, _lam(g.cells[k][0])))
    else:
        row_map = [k + 1 for k in range(g.nrows)]
        new_rsz = [n] + g.rsz
        col_map = [0] + [j + 1 for j in range(1, g.ncols)]
        new_csz = [g.csz[0], n] + g.csz[1:]
        extra = [(0, 1, _neg(_mp_eye(n)))]
        for k in range(g.nrows):
            extra.append((k + 1, 1, _mul(g.cells[k][0], pa)))
    return splice(g, row_map, new_rsz, col_map, new_csz, extra, _mp_zero, g.a_r + 1, g.a_c + 1)


def _n_feed_step(g: Grid, consec: bool, qd: MatrixPolynomial, p, m) -> Grid:
    ar, ac = g.a_r, g.a_c
    if consec:
        row_map = [k if k < ar else k + 1 for k in range(g.nrows)]
        new_rsz = g.rsz[:ar] + [p] + g.rsz[ar:]
        col_map = [j if j < ac else j + 1 for j in range(g.ncols)]
        new_csz = g.csz[:ac] + [p] + g.csz[ac:]
        extra = [(ar, ac, _mp_eye(p))]
        for k in range(ar, g.nrows):
            extra.append((k + 1, ac, _lam(g.cells[k][ac])))
    else:
        row_map = [k if k < ar else k + 1 for k in range(g.nrows)]
        new_rsz = g.rsz[:ar] + [m] + g.rsz[ar:]
        col_map = [j if j <= ac else j + 1 for j in range(g.ncols)]
        new_csz = g.csz[: ac + 1] + [m] + g.csz[ac + 1 :]
        extra = [(ar, ac + 1, _neg(_mp_eye(m)))]
        for k in range(ar, g.nrows):
            extra.append((k + 1, ac + 1, _mul(g.cells[k][ac], qd)))
    return splice(g, row_map, new_rsz, col_map, new_csz, extra, _mp_zero, ar, ac)


def _h_mixed_step(g: Grid, consec: bool, pa: MatrixPolynomial, qd: MatrixPolynomial, n, p, m) -> Grid:
    ar, ac = g.a_r, g.a_c
    if consec:
        row_map = (
            [0]
            + [k + 1 for k in range(1, ar + 1)]
            + [k + 2 for k in range(ar + 1, g.nrows)]
        )
        new_rsz = [g.rsz[0], n] + g.rsz[1 : ar + 1] + [p] + g.rsz[ar + 1 :]
        col_map = [j + 1 if j < ac else j + 2 for j in range(g.ncols)]
        new_csz = [n] + g.csz[:ac] + [p] + g.csz[ac:]
        extra = [(1, 0, _neg(_mp_eye(n))), (ar + 2, ac + 1, _neg(_mp_eye(p)))]
        for j in range(ac):
            extra.append((1, j + 1, _mul(pa, g.cells[0][j])))
        for j in range(ac, g.ncols):
            extra.append((ar + 2, j + 2, _mul(qd, g.cells[ar][j])))
    else:
        row_map = [k + 1 if k < ar else k + 2 for k in range(g.nrows)]
        new_rsz = [n] + g.rsz[:ar] + [m] + g.rsz[ar:]
        col_map = [j + 1 if j < ac else j + 2 for j in range(g.ncols)]
        new_csz = [n] + g.csz[:ac] + [m] + g.csz[ac:]
        extra = [(0, 0, _mp_eye(n)), (ar + 1, ac + 1, _mp_eye(m))]
        for j in range(ac):
            extra.append((0, j + 1, _lam(g.cells[0][j])))
        for j in range(ac, g.ncols):
            extra.append((ar + 1, j + 2, _lam(g.cells[ar][j])))
    return splice(g, row_map, new_rsz, col_map, new_csz, extra, _mp_zero, ar + 1, ac + 1)


def _h_state_step(g: Grid, consec: bool, pa: MatrixPolynomial, n) -> Grid:
    if consec:
        row_map = [0] + [k + 1 for k in range(1, g.nrows)]
        new_rsz = [g.rsz[0], n] + g.rsz[1:]
        col_map = [j + 1 for j in range(g.ncols)]
        new_csz = [n] + g.csz
        extra = [(1, 0, _neg(_mp_eye(n)))]
        for j in range(g.ncols):
            extra.append((1, j + 1, _mul(pa, g.cells[0][j])))
    else:
        row_map = [k + 1 for k in range(g.nrows)]
        new_rsz = [n] + g.rsz
        col_map = [j + 1 for j in range(g.ncols)]
        new_csz = [n] + g.csz
        extra = [(0, 0, _mp_eye(n))]
        for j in range(g.ncols):
            extra.append((0, j + 1, _lam(g.cells[0][j])))
    return splice(g, row_map, new_rsz, col_map, new_csz, extra, _mp_zero, g.a_r + 1, g.a_c + 1)


def _h_feed_step(g: Grid, consec: bool, qd: MatrixPolynomial, p, m) -> Grid:
    ar, ac = g.a_r, g.a_c
    if consec:
        row_map = [k if k <= ar else k + 1 for k in range(g.nrows)]
        new_rsz = g.rsz[: ar + 1] + [p] + g.rsz[ar + 1 :]
        col_map = [j if j < ac else j + 1 for j in range(g.ncols)]
        new_csz = g.csz[:ac] + [p] + g.csz[ac:]
        extra = [(ar + 1, ac, _neg(_mp_eye(p)))]
        for j in range(ac, g.ncols):
            extra.append((ar + 1, j + 1, _mul(qd, g.cells[ar][j])))
    else:
        row_map = [k if k < ar else k + 1 for k in range(g.nrows)]
        new_rsz = g.rsz[:ar] + [m] + g.rsz[ar:]
        col_map = [j if j < ac else j + 1 for j in range(g.ncols)]
        new_csz = g.csz[:ac] + [m] + g.csz[ac:]
        extra = [(ar, ac, _mp_eye(m))]
        for j in range(ac, g.ncols):
            extra.append((ar, j + 1, _lam(g.cells[ar][j])))
    return splice(g, row_map, new_rsz, col_map, new_csz, extra, _mp_zero, ar, ac)


# -- sequence builders -------------------------------------------------------


def _check_degree(r: Rsmp, s: SigmaSeq):
    d = r.degree
    if len(s) != d - 1:
        raise DimensionError(f"need {d - 1} decisions for degree {d}, got {len(s)}")
    if d < 2:
        raise DimensionError("witness sequences need pencil degree >= 2")


def _grid_to_pbm(g: Grid) -> PolyBlockMatrix:
    deg = max(cell.degree for row in g.cells for cell in row)
    rows_total, cols_total = sum(g.rsz), sum(g.csz)
    coeffs = np.zeros((deg + 1, rows_total, cols_total), dtype=complex)
    r0 = 0
    for rr, rs in enumerate(g.rsz):
        c0 = 0
        for cc, cs in enumerate(g.csz):
            cell = g.cells[rr][cc]
            coeffs[: cell.degree + 1, r0 : r0 + rs, c0 : c0 + cs] = cell.coeffs
            c0 += cs
        r0 += rs
    return PolyBlockMatrix(MatrixPolynomial(coeffs), g.rsz, g.csz)


def _n_grids(r: Rsmp, s: SigmaSeq) -> list[Grid]:
    _check_degree(r, s)
    n, p, m = r.n, r.p, r.m
    grids = [_n_seed(r, s.has_consecution(0))]
    if r.d_a >= r.d_d:
        for i in range(1, r.d_d - 1):
            grids.append(
                _n_mixed_step(
                    grids[-1], s.has_consecution(i),
                    r.A.horner_shift(r.d_a - i - 1), r.D.horner_shift(r.d_d - i - 1), n, p, m,
                )
            )
        for i in range(max(1, r.d_d - 1), r.d_a - 1):
            grids.append(
                _n_state_step(grids[-1], s.has_consecution(i), r.A.horner_shift(r.d_a - i - 1), n)
            )
    else:
        for i in range(1, r.d_a - 1):
            grids.append(
                _n_mixed_step(
                    grids[-1], s.has_consecution(i),
                    r.A.horner_shift(r.d_a - i - 1), r.D.horner_shift(r.d_d - i - 1), n, p, m,
                )
            )
        for i in range(max(1, r.d_a - 1), r.d_d - 1):
            grids.append(
                _n_feed_step(grids[-1], s.has_consecution(i), r.D.horner_shift(r.d_d - i - 1), p, m)
            )
    return grids


def _h_grids(r: Rsmp, s: SigmaSeq) -> list[Grid]:
    _check_degree(r, s)
    n, p, m = r.n, r.p, r.m
    grids = [_h_seed(r, s.has_consecution(0))]
    if r.d_a >= r.d_d:
        for i in range(1, r.d_d - 1):
            grids.append(
                _h_mixed_step(
                    grids[-1], s.has_consecution(i),
                    r.A.horner_shift(r.d_a - i - 1), r.D.horner_shift(r.d_d - i - 1), n, p, m,
                )
            )
        for i in range(max(1, r.d_d - 1), r.d_a - 1):
            grids.append(
                _h_state_step(grids[-1], s.has_consecution(i), r.A.horner_shift(r.d_a - i - 1), n)
            )
    else:
        for i in range(1, r.d_a - 1):
            grids.append(
                _h_mixed_step(
                    grids[-1], s.has_consecution(i),
                    r.A.horner_shift(r.d_a - i - 1), r.D.horner_shift(r.d_d - i - 1), n, p, m,
                )
            )
        for i in range(max(1, r.d_a - 1), r.d_d - 1):
            grids.append(
                _h_feed_step(grids[-1], s.has_consecution(i), r.D.horner_shift(r.d_d - i - 1), p, m)
            )
    return grids


def build_n_sequence(r: Rsmp, s: SigmaSeq) -> list[PolyBlockMatrix]:
    """Left witness sequence; the final element is the left equivalence matrix."""
    return [_grid_to_pbm(g) for g in _n_grids(r, s)]


def build_h_sequence(r: Rsmp, s: SigmaSeq) -> list[PolyBlockMatrix]:
    """Right witness sequence; the final element is the right equivalence matrix."""
    return [_grid_to_pbm(g) for g in _h_grids(r, s)]


def unimodular_pair(r: Rsmp, s: SigmaSeq) -> tuple[PolyBlockMatrix, PolyBlockMatrix]:
    """Final (U, V) witnesses for the decision sequence; needs degree >= 2."""
    if r.degree < 2:
        raise DimensionError("witnesses are defined for pencil degree >= 2")
    return _grid_to_pbm(_n_grids(r, s)[-1]), _grid_to_pbm(_h_grids(r, s)[-1])


def linearization_with_witnesses(r: Rsmp, s: SigmaSeq):
    """(L, U, V) for any degree; degree 1 gets identity witnesses."""
    from .fiedler import fiedler_pencil_rect

    pencil = fiedler_pencil_rect(r, s)
    if r.degree == 1:
        u = PolyBlockMatrix(MatrixPolynomial.identity(pencil.shape[0]), pencil.row_sizes, pencil.row_sizes)
        v = PolyBlockMatrix(MatrixPolynomial.identity(pencil.shape[1]), pencil.col_sizes, pencil.col_sizes)
        return pencil, u, v
    u, v = unimodular_pair(r, s)
    return pencil, u, v


# -- verification ------------------------------------------------------------


def sample_points(count: int, rng) -> np.ndarray:
    """Random points in the annulus 0.5 <= |z| <= 2 (away from origin and overflow)."""
    radii = rng.uniform(0.5, 2.0, size=count)
    angles = rng.uniform(0.0, 2.0 * np.pi, size=count)
    return radii * np.exp(1j * angles)


def is_unimodular(u, points: int = 10, tol: float = 1e-8, rng=None) -> bool:
    """Sampled unimodularity: determinant nonzero and constant across points."""
    rng = np.random.default_rng(0) if rng is None else rng
    zs = sample_points(points, rng)
    dets = np.array([np.linalg.det(u.eval(z)) for z in zs])
    return abs(dets[0]) > tol and bool(np.all(np.abs(dets - dets[0]) <= tol * (1 + abs(dets[0]))))


def _padding_sizes(r: Rsmp, s: SigmaSeq) -> tuple[int, int]:
    """(state padding, feedthrough padding) of the reduced form."""
    alpha_prime = (r.d_a - 1) * r.n
    hi = r.d_d - 2  # decisions that grew the feedthrough side, either regime
    if hi < 0:
        alpha = 0
    else:
        alpha = r.p * s.c_count(0, hi) + r.m * s.i_count(0, hi)
    return alpha_prime, alpha


def _target_at(r: Rsmp, alpha_prime: int, alpha: int, z: complex) -> np.ndarray:
    n, p, m = r.n, r.p, r.m
    rows = alpha_prime + n + alpha + p
    cols = alpha_prime + n + alpha + m
    t = np.zeros((rows, cols), dtype=complex)
    t[:alpha_prime, :alpha_prime] = np.eye(alpha_prime)
    t[alpha_prime : alpha_prime + n, alpha_prime : alpha_prime + n] = r.A.eval(z)
    t[alpha_prime : alpha_prime + n, alpha_prime + n + alpha :] = -r.B
    t[alpha_prime + n : alpha_prime + n + alpha, alpha_prime + n : alpha_prime + n + alpha] = np.eye(alpha)
    t[alpha_prime + n + alpha :, alpha_prime : alpha_prime + n] = r.C
    t[alpha_prime + n + alpha :, alpha_prime + n + alpha :] = r.D.eval(z)
    return t


@dataclass
class EquivalenceReport:
    """Residuals of the sampled equivalence check.

    ``block_residuals`` maps 1-based positions of the four-block target
    partition (state padding, state, feedthrough padding, feedthrough) to
    their worst relative residual over the sample points.
    """

    max_residual: float
    corollary_residual: float
    block_residuals: dict[tuple[int, int], float] = field(default_factory=dict)
    u_unimodularity: float = 0.0
    v_unimodularity: float = 0.0
    tol: float = 1e-8

    @property
    def verdict(self) -> bool:
        return (
            self.max_residual <= self.tol
            and self.corollary_residual <= self.tol
            and self.u_unimodularity <= self.tol
            and self.v_unimodularity <= self.tol
        )


def verify_theorem(
    r: Rsmp,
    s: SigmaSeq,
    pencil: Pencil,
    u: PolyBlockMatrix,
    v: PolyBlockMatrix,
    points: int = 20,
    tol: float = 1e-8,
    rng=None,
) -> EquivalenceReport:
    """Sampled check that U L V equals the padded system matrix.

    At each sample point the product U(z) (z lead - tail) V(z) is compared
    against the four-block target, and, after explicit row/column
    permutations, against blkdiag(identity, S(z), identity).  Residuals are
    relative to the product's magnitude.  Unimodularity of U and V is
    checked by determinant sampling at the same points.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    alpha_prime, alpha = _padding_sizes(r, s)
    n, p, m = r.n, r.p, r.m
    rows = alpha_prime + n + alpha + p
    cols = alpha_prime + n + alpha + m
    if u.shape != (rows, rows) or v.shape != (cols, cols) or pencil.shape != (rows, cols):
        raise DimensionError(
            f"witness/pencil dimensions {u.shape}/{pencil.shape}/{v.shape} do not conform "
            f"to the {rows}x{cols} target"
        )
    rcuts = np.cumsum([0, alpha_prime, n, alpha, p])
    ccuts = np.cumsum([0, alpha_prime, n, alpha, m])
    # permutation to the block-diagonal corollary form
    row_perm = np.r_[0:alpha_prime, alpha_prime : alpha_prime + n,
                     rcuts[3] : rcuts[4], rcuts[2] : rcuts[3]].astype(int)
    col_perm = np.r_[0:alpha_prime, alpha_prime : alpha_prime + n,
                     ccuts[3] : ccuts[4], ccuts[2] : ccuts[3]].astype(int)

    zs = sample_points(points, rng)
    max_res = 0.0
    cor_res = 0.0
    block_res: dict[tuple[int, int], float] = {}
    u_dets = []
    v_dets = []
    s_poly = r.assemble_s()
    for z in zs:
        uz = u.eval(z)
        vz = v.eval(z)
        lz = pencil.eval(z)
        prod = uz @ lz @ vz
        t = _target_at(r, alpha_prime, alpha, z)
        scale = max(
            1.0,
            float(np.linalg.norm(uz) * np.linalg.norm(lz) * np.linalg.norm(vz)),
        )
        diff = prod - t
        max_res = max(max_res, float(np.linalg.norm(diff)) / scale)
        for bi in range(4):
            for bj in range(4):
                sub = diff[rcuts[bi] : rcuts[bi + 1], ccuts[bj] : ccuts[bj + 1]]
                if sub.size:
                    key = (bi + 1, bj + 1)
                    block_res[key] = max(
                        block_res.get(key, 0.0), float(np.max(np.abs(sub))) / scale
                    )
        cor = prod[np.ix_(row_perm, col_perm)]
        cor_target = np.zeros_like(cor)
        cor_target[:alpha_prime, :alpha_prime] = np.eye(alpha_prime)
        cor_target[alpha_prime : alpha_prime + n + p, alpha_prime : alpha_prime + n + m] = s_poly.eval(z)
        cor_target[alpha_prime + n + p :, alpha_prime + n + m :] = np.eye(alpha)
        cor_res = max(cor_res, float(np.linalg.norm(cor - cor_target)) / scale)
        u_dets.append(np.linalg.det(uz))
        v_dets.append(np.linalg.det(vz))

    def _dev(dets):
        dets = np.asarray(dets)
        return float(max(np.max(np.abs(np.abs(dets) - 1.0)), np.max(np.abs(dets - dets[0]))))

    return EquivalenceReport(
        max_residual=max_res,
        corollary_residual=cor_res,
        block_residuals=block_res,
        u_unimodularity=_dev(u_dets),
        v_unimodularity=_dev(v_dets),
        tol=tol,
    )


def system_equivalence_check(s1, s2, transforms, points: int = 12, tol: float = 1e-8, rng=None) -> bool:
    """Sampled block-diagonal equivalence diag(U, Ut) S1 diag(V, Vt) == S2.

    ``transforms`` is the quadruple (U, Ut, V, Vt); each must be square,
    conformable with the stated partitions, and pass a sampled
    unimodularity precheck.  Returns False if the precheck or the sampled
    identity fails.
    """
    u, ut, v, vt = transforms
    rng = np.random.default_rng(0) if rng is None else rng
    r1, c1 = s1.shape
    if u.shape[0] != u.shape[1] or ut.shape[0] != ut.shape[1]:
        raise DimensionError("left transforms must be square")
    if v.shape[0] != v.shape[1] or vt.shape[0] != vt.shape[1]:
        raise DimensionError("right transforms must be square")
    if u.shape[0] + ut.shape[0] != r1 or v.shape[0] + vt.shape[0] != c1:
        raise DimensionError("transform partition does not tile the system matrix")
    if s2.shape != s1.shape:
        raise DimensionError("system matrices must share dimensions")
    for t in transforms:
        if not is_unimodular(t, points=6, tol=tol, rng=rng):
            return False
    nu = u.shape[0]
    nv = v.shape[0]
    for z in sample_points(points, rng):
        left = np.zeros((r1, r1), dtype=complex)
        left[:nu, :nu] = u.eval(z)
        left[nu:, nu:] = ut.eval(z)
        right = np.zeros((c1, c1), dtype=complex)
        right[:nv, :nv] = v.eval(z)
        right[nv:, nv:] = vt.eval(z)
        got = left @ s1.eval(z) @ right
        want = s2.eval(z)
        scale = max(1.0, float(np.linalg.norm(got)), float(np.linalg.norm(want)))
        if np.linalg.norm(got - want) > tol * scale:
            return False
    return True
