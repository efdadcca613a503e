"""Smith normal form over the integers with transformation matrices."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SNFResult:
    D: list
    U: list
    V: list

    @property
    def diagonal(self) -> list:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def determinant(M) -> int:
    """Exact determinant by fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(A) -> SNFResult:
    """U A V = D with U, V unimodular and d1 | d2 | ... on the diagonal (all >= 0)."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        for M in (D, U):
            M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]

    def add_col(src, dst, c):
        for M in (D, V):
            for row in M:
                row[dst] += c * row[src]

    def neg_row(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    add_row(t, i, -q)
                if D[i][t]:
                    swap_rows(t, i)
                    done = False
                    break
            if not done:
                continue
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    add_col(t, j, -q)
                if D[t][j]:
                    swap_cols(t, j)
                    done = False
                    break
            if not done:
                continue
            # divisibility: the pivot must divide the rest of the block
            for i in range(t + 1, m):
                if any(D[i][j] % D[t][t] for j in range(t + 1, n)):
                    add_row(i, t, 1)
                    done = False
                    break
        if D[t][t] < 0:
            neg_row(t)
        t += 1
    return SNFResult(D, U, V)
