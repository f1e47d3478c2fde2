"""Independent dense symmetric eigensolver used to cross-check integer
certificates.

Deliberately self-contained (cyclic-by-row Jacobi rotations on plain
lists of floats) so the numeric route shares no code with the integer
verification it audits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NoConvergence, NotSymmetric, TooLarge
from .graphs import Graph

MAX_JACOBI_N = 256
DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100

Matrix = list[list[float]]


def laplacian_matrix(g: Graph) -> Matrix:
    """Degree matrix minus adjacency matrix, with entries stored as floats."""
    m = [[0.0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        m[i][i] = float(len(g.neighbors[i]))
        for j in g.neighbors[i]:
            m[i][j] = -1.0
    return m


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    eigenvectors: tuple[tuple[float, ...], ...] | None = None


def _off_diagonal_norm(a: Matrix, n: int) -> float:
    s = 0.0
    for i in range(n):
        row = a[i]
        for j in range(i + 1, n):
            s += row[j] * row[j]
    return math.sqrt(2.0 * s)


def jacobi_spectrum(
    matrix: Matrix,
    tol: float = DEFAULT_TOL,
    want_eigenvectors: bool = False,
) -> Spectrum:
    """Eigenvalues of a symmetric matrix by cyclic-by-row Jacobi rotations.

    Sweeps rotate away every off-diagonal entry in row order until the
    off-diagonal Frobenius norm drops below tol; a sweep cap turns
    non-convergence into an explicit error instead of a silent result.
    """
    n = len(matrix)
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if n > MAX_JACOBI_N:
        raise TooLarge(n, MAX_JACOBI_N)
    for i in range(n):
        if len(matrix[i]) != n:
            raise NotSymmetric(f"row {i} has length {len(matrix[i])}, expected {n}")
        for j in range(i + 1, n):
            if abs(matrix[i][j] - matrix[j][i]) > 1e-12:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    a = [row[:] for row in matrix]
    vecs = [[float(i == j) for j in range(n)] for i in range(n)] if want_eigenvectors else None

    converged = n < 2 or _off_diagonal_norm(a, n) <= tol
    sweeps = 0
    while not converged:
        if sweeps >= MAX_SWEEPS:
            raise NoConvergence(sweeps)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p][k]
                    aqk = a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                if vecs is not None:
                    for k in range(n):
                        vkp = vecs[k][p]
                        vkq = vecs[k][q]
                        vecs[k][p] = c * vkp - s * vkq
                        vecs[k][q] = s * vkp + c * vkq
        converged = _off_diagonal_norm(a, n) <= tol

    order = sorted(range(n), key=lambda i: a[i][i])
    eigenvalues = tuple(a[i][i] for i in order)
    eigenvectors = None
    if vecs is not None:
        eigenvectors = tuple(tuple(vecs[k][i] for k in range(n)) for i in order)
    return Spectrum(eigenvalues, eigenvectors)


def contains_eigenvalue(spectrum: Spectrum, eigenvalue: int, tol: float) -> bool:
    """True iff some spectrum entry lies within tol of the integer."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return any(abs(x - eigenvalue) <= tol for x in spectrum.eigenvalues)
