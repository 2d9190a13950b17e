"""Three routes to one rational eigenvalue problem, and where they disagree.

The running example is the 2x2 rational matrix

    R(l) = [[ l - 2 + 1/(l - 1), 1 ],
            [ 1,                 0 ]],

realized as a system quadruple with scalar state A(l) = l - 1, constant
couplings, and feedthrough D(l) = [[l - 2, 1], [1, 0]].  The system matrix
keeps the pole and the eigenvalue separate; clearing the denominator merges
them and manufactures an extra (double) eigenvalue at the former pole.
"""

import numpy as np

import rosenpencil as rp

A = rp.MatrixPolynomial([[[-1.0]], [[1.0]]])
B = [[-1.0, 0.0]]
C = [[-1.0], [0.0]]
D = rp.MatrixPolynomial([[[-2.0, 1.0], [1.0, 0.0]], [[1.0, 0.0], [0.0, 0.0]]])
system = rp.Rsmp(A, B, C, D)

print("system matrix at l = 2:")
print(rp.assemble_s(system).eval(2.0).real)

print("\ntransfer function at l = 2 (away from the pole):")
print(rp.transfer_eval(system, 2.0).real)

try:
    rp.transfer_eval(system, 1.0)
except rp.PoleError as exc:
    print(f"\ntransfer function at l = 1: {exc}")

print("\n-- spectra through the three routes --")
report = rp.discrepancy_report(system)
print("system matrix eigenvalues:", [(round(z.real, 6), k) for z, k in report.s_eigenvalues])
print("state-polynomial eigenvalues (poles):", [(round(z.real, 6), k) for z, k in report.pole_points])
for z, status in report.transfer_tests:
    print(f"transfer function at {z.real:.6g}: {status}")
print("cleared-denominator eigenvalues:", [(round(z.real, 6), k) for z, k in report.cleared_eigenvalues])
print("eigenvalues created by clearing:", [round(z.real, 6) for z in report.cleared_minus_s])

print("\nThe cleared quadratic owns a double root at the former pole, so the")
print("polynomial route is more sensitive there than the system matrix route.")
