"""The Rosenbrock system data model: state/coupling/feedthrough quadruple.

An instance bundles a regular n-by-n state polynomial A, constant coupling
matrices B (n-by-m) and C (p-by-n), and a p-by-m feedthrough polynomial D.
The assembled system matrix polynomial is

    S(lambda) = [[A(lambda), -B], [C, D(lambda)]],

and the transfer function is R(lambda) = D(lambda) + C A(lambda)^{-1} B.
Degrees are declared, not inferred: a zero leading coefficient is legal and
the pencil constructions branch on the declared pair (d_A, d_D).
"""

from __future__ import annotations

import warnings

import numpy as np
import scipy.linalg

from .errors import DimensionError, InterpolationResidual, IrregularWarning, PoleError, SingularInput
from .polycore import MatrixPolynomial, as_matrix, is_regular, scalar_poly_eval, scalar_poly_trim

__all__ = ["Rsmp", "assemble_s", "transfer_eval", "clear_denominator"]


class Rsmp:
    """Rosenbrock system matrix polynomial data, immutable after construction.

    A failed regularity check on the state polynomial is a warning, not an
    error; transfer-function evaluation and pole computations then refuse
    to run.
    """

    __slots__ = ("A", "B", "C", "D", "a_regular")

    def __init__(self, A: MatrixPolynomial, B, C, D: MatrixPolynomial, check_regular: bool = True):
        B = as_matrix(B)
        C = as_matrix(C)
        if A.rows != A.cols:
            raise DimensionError("state polynomial must be square")
        if A.degree < 1 or D.degree < 1:
            raise DimensionError("declared degrees must be at least 1")
        n = A.rows
        p, m = D.shape
        if B.shape != (n, m):
            raise DimensionError(f"B must be {n}x{m}, got {B.shape}")
        if C.shape != (p, n):
            raise DimensionError(f"C must be {p}x{n}, got {C.shape}")
        B.setflags(write=False)
        C.setflags(write=False)
        self.A = A
        self.B = B
        self.C = C
        self.D = D
        if check_regular:
            self.a_regular = is_regular(A)
            if not self.a_regular:
                warnings.warn(
                    "state polynomial failed the probabilistic regularity check; "
                    "transfer-function evaluation is disabled",
                    IrregularWarning,
                    stacklevel=2,
                )
        else:
            self.a_regular = True

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def p(self) -> int:
        return self.D.rows

    @property
    def m(self) -> int:
        return self.D.cols

    @property
    def d_a(self) -> int:
        return self.A.degree

    @property
    def d_d(self) -> int:
        return self.D.degree

    @property
    def degree(self) -> int:
        return max(self.d_a, self.d_d)

    def __repr__(self):
        return (
            f"Rsmp(n={self.n}, p={self.p}, m={self.m}, d_A={self.d_a}, d_D={self.d_d})"
        )

    # method forms of the module operations
    def assemble_s(self) -> MatrixPolynomial:
        return assemble_s(self)

    def transfer_eval(self, z: complex) -> np.ndarray:
        return transfer_eval(self, z)


def assemble_s(r: Rsmp) -> MatrixPolynomial:
    """Assemble S(lambda) of degree max(d_A, d_D).

    The couplings enter only the constant coefficient, with -B in the upper
    right block (the file format stores B itself; the sign lives here).
    """
    n, p, m = r.n, r.p, r.m
    d = r.degree
    coeffs = np.zeros((d + 1, n + p, n + m), dtype=complex)
    for k in range(d + 1):
        coeffs[k, :n, :n] = r.A.coeff(k)
        coeffs[k, n:, n:] = r.D.coeff(k)
    coeffs[0, :n, n:] = -r.B
    coeffs[0, n:, :n] = r.C
    return MatrixPolynomial(coeffs)


def _solve_state(r: Rsmp, z: complex, rhs: np.ndarray) -> np.ndarray:
    """LU solve A(z) x = rhs, raising PoleError at (near-)singular points."""
    az = r.A.eval(z)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(az, check_finite=False)
    diag = np.abs(np.diag(lu))
    # reference scale from the coefficients, not A(z): near a pole the whole
    # matrix can be tiny and a relative-to-itself test would never trigger
    scale = max(r.A.norm_inf() * max(1.0, abs(z)) ** r.d_a, float(diag.max()), 1e-300)
    if float(diag.min()) <= 1e-12 * scale:
        raise PoleError(f"state polynomial is singular at z={z}")
    return scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)


def transfer_eval(r: Rsmp, z: complex) -> np.ndarray:
    """Evaluate the transfer function D(z) + C A(z)^{-1} B via an LU solve."""
    if not r.a_regular:
        raise SingularInput("transfer function undefined: state polynomial is singular")
    x = _solve_state(r, z, np.asarray(r.B, dtype=complex))
    return r.D.eval(z) + r.C @ x


def clear_denominator(r: Rsmp, s, tol: float = 1e-8) -> MatrixPolynomial:
    """Matrix polynomial s(lambda) * R(lambda), certified by interpolation.

    Samples s(z)R(z) at enough points for the degree bound, interpolates
    entrywise, and validates at holdout points.  If s does not clear every
    pole the holdout residual is large and InterpolationResidual is raised.
    """
    if not r.a_regular:
        raise SingularInput("transfer function undefined: state polynomial is singular")
    s = scalar_poly_trim(s)
    if np.max(np.abs(s)) == 0.0:
        raise ValueError("clearing polynomial must be nonzero")
    deg_s = s.size - 1
    bound = deg_s + max(r.d_d, (r.n - 1) * r.d_a)
    npts = bound + 1

    for attempt in range(3):
        rng = np.random.default_rng(1234 + attempt)
        rho = 1.1 + 0.2 * attempt
        phase = rng.uniform(0.0, 2.0 * np.pi)
        try:
            zs = rho * np.exp(1j * (2.0 * np.pi * np.arange(npts) / npts + phase))
            vals = np.stack([scalar_poly_eval(s, z) * transfer_eval(r, z) for z in zs])
            spec = np.fft.fft(vals, axis=0) / npts  # nodes carry positive angles
            ks = np.arange(npts)
            coeffs = spec / (rho**ks * np.exp(1j * ks * phase))[:, None, None]
            scale = max(1.0, float(np.max(np.abs(vals))))
            # trim trailing numerically-zero coefficient matrices
            top = bound
            while top > 0 and np.max(np.abs(coeffs[top])) <= 1e-9 * scale:
                top -= 1
            result = MatrixPolynomial(coeffs[: top + 1].copy())
            for _ in range(2):
                zh = (0.7 + rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
                want = scalar_poly_eval(s, zh) * transfer_eval(r, zh)
                got = result.eval(zh)
                if np.max(np.abs(want - got)) > tol * scale * max(1.0, abs(zh)) ** bound:
                    raise InterpolationResidual(
                        "s(lambda)R(lambda) is not a polynomial of the expected degree; "
                        "the clearing polynomial misses a pole"
                    )
            return result
        except PoleError:
            continue  # a sample point hit a pole; rotate and retry
    raise InterpolationResidual("could not find pole-free sample points")
