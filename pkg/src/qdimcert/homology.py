"""Smith normal form over the integers and abelianization of presentations."""

from __future__ import annotations

from dataclasses import dataclass

from .words import Presentation

Matrix = list[list[int]]


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(cols)]
            for i in range(len(A))]


@dataclass(frozen=True)
class SNFResult:
    D: Matrix
    U: Matrix
    V: Matrix

    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def smith_normal_form(A: Matrix) -> SNFResult:
    """Return D, U, V with U A V = D, D diagonal, d_i | d_{i+1}, entries >= 0."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row_dst += c * row_src
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for M in (D, V):
            for row in M:
                row[dst] += c * row[src]

    for t in range(min(m, n)):
        # pivot: smallest nonzero absolute value in the remaining block
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
                    clean &= D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
                    clean &= D[t][j] == 0
            if not clean:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return SNFResult(D, U, V)


def first_homology(P: Presentation) -> list[int]:
    """Invariant factors of the abelianization, trivial ones dropped.

    ``[]`` is the trivial group; each ``0`` is a free Z summand.
    """
    ngens = len(P.gens)
    A = P.exponent_matrix()
    if not A:
        return [0] * ngens
    diag = smith_normal_form(A).diagonal()
    diag += [0] * (ngens - len(diag))
    return [d for d in diag if d != 1]
