"""Dense complex matrix polynomials with Horner evaluation and Horner shifts.

Matrices are plain ``numpy`` arrays of ``complex128``.  A matrix polynomial
stores its coefficients low degree to high, all with identical dimensions.
The stored degree is declared by the coefficient list: a zero leading
coefficient is legal, so callers can force a degree (the pencil
constructions branch on declared degrees, not effective ones).

Scalar polynomials are represented throughout the package as 1-D complex
arrays of coefficients, low degree to high, mirroring
``numpy.polynomial.polynomial`` conventions.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError

__all__ = [
    "MatrixPolynomial",
    "as_matrix",
    "is_regular",
    "kron_unit_embed",
    "scalar_poly_eval",
    "scalar_poly_trim",
]


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


class MatrixPolynomial:
    """A matrix polynomial ``sum_i lambda^i C_i`` with dense complex coefficients.

    Parameters
    ----------
    coeffs : sequence of array_like
        Coefficient matrices, low degree to high.  All must share one shape.
        Alternatively a single 3-D array indexed ``(degree, row, col)``.

    Notes
    -----
    Instances are immutable; the coefficient array is marked read-only.
    ``degree`` reports the declared (stored) bound, ``effective_degree``
    trims trailing zero coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        if isinstance(coeffs, np.ndarray) and coeffs.ndim == 3:
            arr = coeffs.astype(complex, copy=True)
        else:
            mats = [as_matrix(c) for c in coeffs]
            if not mats:
                raise DimensionError("a matrix polynomial needs at least one coefficient")
            shape = mats[0].shape
            for k, c in enumerate(mats):
                if c.shape != shape:
                    raise DimensionError(
                        f"coefficient {k} has shape {c.shape}, expected {shape}"
                    )
            arr = np.stack(mats)
        if arr.shape[0] == 0:
            raise DimensionError("a matrix polynomial needs at least one coefficient")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, m) -> "MatrixPolynomial":
        return cls(np.asarray(m, dtype=complex)[None, :, :])

    @classmethod
    def zero(cls, rows: int, cols: int, degree: int = 0) -> "MatrixPolynomial":
        return cls(np.zeros((degree + 1, rows, cols), dtype=complex))

    @classmethod
    def identity(cls, k: int) -> "MatrixPolynomial":
        return cls.constant(np.eye(k))

    # -- basic queries -------------------------------------------------

    @property
    def rows(self) -> int:
        return self.coeffs.shape[1]

    @property
    def cols(self) -> int:
        return self.coeffs.shape[2]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def degree(self) -> int:
        """Declared degree bound (trailing zero coefficients count)."""
        return self.coeffs.shape[0] - 1

    def effective_degree(self, tol: float = 0.0) -> int:
        """Largest k whose coefficient has an entry of magnitude > tol."""
        for k in range(self.degree, -1, -1):
            if np.max(np.abs(self.coeffs[k])) > tol:
                return k
        return 0

    def coeff(self, k: int) -> np.ndarray:
        """Coefficient of lambda^k; zero matrix beyond the stored degree."""
        if 0 <= k <= self.degree:
            return self.coeffs[k]
        return np.zeros((self.rows, self.cols), dtype=complex)

    def __repr__(self):
        return f"MatrixPolynomial(degree={self.degree}, shape={self.rows}x{self.cols})"

    # -- operations ----------------------------------------------------

    def eval(self, z: complex) -> np.ndarray:
        """Evaluate at z by Horner's rule."""
        acc = np.array(self.coeffs[-1], dtype=complex)
        for k in range(self.degree - 1, -1, -1):
            acc = z * acc + self.coeffs[k]
        return acc

    def horner_shift(self, k: int) -> "MatrixPolynomial":
        """Degree-k tail polynomial ``C_{d-k} + lambda C_{d-k+1} + ... + lambda^k C_d``.

        Satisfies shift(0) = leading coefficient, shift(d) = the polynomial
        itself, and shift(k+1) = lambda*shift(k) + C_{d-k-1}.
        """
        d = self.degree
        if not 0 <= k <= d:
            raise ValueError(f"shift index {k} out of range 0..{d}")
        return MatrixPolynomial(self.coeffs[d - k :])

    def norm_inf(self) -> float:
        """Largest entry magnitude over all coefficients."""
        return float(np.max(np.abs(self.coeffs)))


def is_regular(p: MatrixPolynomial, trials: int = 8, rng_seed: int = 0) -> bool:
    """Probabilistic regularity test: does det p(lambda) vanish identically?

    Samples ``trials`` points from the disc of radius 2 and reports True as
    soon as one determinant clears a scale-aware tolerance
    ``1e-10 * (1-norm)^n``.  For a regular polynomial this succeeds with
    probability one; for det identically zero it is False for every seed.
    """
    if p.rows != p.cols:
        raise DimensionError("regularity is defined for square matrix polynomials")
    n = p.rows
    rng = np.random.default_rng(rng_seed)
    for _ in range(max(1, trials)):
        z = 2.0 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        m = p.eval(z)
        norm1 = np.max(np.abs(m).sum(axis=0)) if m.size else 0.0
        if abs(np.linalg.det(m)) > 1e-10 * norm1**n:
            return True
    return False


def kron_unit_embed(r, c, rblocks, cblocks, m, blockdims) -> np.ndarray:
    """Place ``m`` in block (r, c) of an otherwise zero block matrix.

    ``blockdims = (row_sizes, col_sizes)`` fixes the partition; block
    indices are 1-based.  Equals the Kronecker product of a unit
    row-by-column indicator with ``m`` when all blocks share m's shape.
    """
    row_sizes, col_sizes = ([int(x) for x in blockdims[0]], [int(x) for x in blockdims[1]])
    if len(row_sizes) != rblocks or len(col_sizes) != cblocks:
        raise DimensionError("blockdims inconsistent with block counts")
    if not (1 <= r <= rblocks and 1 <= c <= cblocks):
        raise DimensionError("block index out of range")
    m = as_matrix(m)
    if m.shape != (row_sizes[r - 1], col_sizes[c - 1]):
        raise DimensionError(
            f"matrix shape {m.shape} does not fit block ({r},{c}) of size "
            f"({row_sizes[r - 1]},{col_sizes[c - 1]})"
        )
    out = np.zeros((sum(row_sizes), sum(col_sizes)), dtype=complex)
    r0 = sum(row_sizes[: r - 1])
    c0 = sum(col_sizes[: c - 1])
    out[r0 : r0 + m.shape[0], c0 : c0 + m.shape[1]] = m
    return out


def scalar_poly_eval(coeffs, z: complex) -> complex:
    """Horner evaluation of a scalar polynomial given low-to-high coefficients."""
    c = np.asarray(coeffs, dtype=complex).ravel()
    acc = complex(c[-1])
    for k in range(c.size - 2, -1, -1):
        acc = z * acc + c[k]
    return acc


def scalar_poly_trim(coeffs, rel_tol: float = 0.0) -> np.ndarray:
    """Drop trailing coefficients of magnitude <= rel_tol * max|c|."""
    c = np.asarray(coeffs, dtype=complex).ravel()
    if c.size == 0:
        raise DimensionError("scalar polynomial needs at least one coefficient")
    cut = rel_tol * np.max(np.abs(c)) if c.size else 0.0
    k = c.size - 1
    while k > 0 and abs(c[k]) <= cut:
        k -= 1
    return c[: k + 1].copy()
