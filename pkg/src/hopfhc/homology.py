"""Hochschild and cyclic cohomology of a finite cocyclic presentation.

Conventions: faces d_j: C^n -> C^(n+1) satisfy t d_j = d_(j+1) t and
t d_(n+1) = d_0. The bicomplex uses T := t^-1, which satisfies the classical
relations T d_(j+1) = d_j T, T d_0 = d_(n+1), with

    b  = sum_(j=0)^(n+1) (-1)^j d_j,   b' = sum_(j=0)^(n) (-1)^j d_j,
    lambda = (-1)^n T_n,               N  = sum_(i=0)^(n) lambda^i,

columns alternating b (even) and -b' (odd), horizontal maps 1 - lambda
(even -> odd) and N (odd -> even). Then b'(1 - lambda) = (1 - lambda) b and
b N = N b', so the squares anticommute.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import NotAComplex, NotCocyclic
from .linalg import SparseMatrix, block_matrix, matrix_power, rank
from .quotients import CocyclicData


@dataclass
class HomologyReport:
    theory: str
    max_degree: int
    ranks: list
    runtime_ms: float
    ledger: list = field(default_factory=list)

    def rank_list(self) -> list:
        return [{"n": n, "rank": r} for n, r in enumerate(self.ranks)]


def coboundary(c: CocyclicData, n: int, prime: bool = False) -> SparseMatrix:
    top = n if prime else n + 1
    m = SparseMatrix.zero(c.dims[n + 1], c.dims[n])
    for j in range(top + 1):
        f = c.faces[(n, j)]
        m = m + (f if j % 2 == 0 else -f)
    return m


def _lam(c: CocyclicData, n: int) -> SparseMatrix:
    T = c.cyclic_inv[n]
    return T if n % 2 == 0 else -T


def _norm(c: CocyclicData, n: int) -> SparseMatrix:
    lam = _lam(c, n)
    out = SparseMatrix.identity(c.dims[n])
    p = SparseMatrix.identity(c.dims[n])
    for _ in range(n):
        p = lam @ p
        out = out + p
    return out


def _require_degrees(c: CocyclicData, N: int) -> None:
    if c.max_degree < N + 1:
        raise ValueError(f"cocyclic data has degrees <= {c.max_degree}; need {N + 1}")


def hochschild_cohomology(c: CocyclicData, N: int) -> HomologyReport:
    start = time.perf_counter()
    _require_degrees(c, N)
    ledger = []
    bs = [coboundary(c, n) for n in range(N + 1)]
    for n in range(N):
        if not (bs[n + 1] @ bs[n]).is_zero():
            raise NotAComplex(f"b^2 != 0 from degree {n}")
    ledger.append({"name": "b^2=0", "degrees": list(range(N)), "pass": True, "fatal": True})
    rk = [rank(b) for b in bs]
    ranks = [c.dims[n] - rk[n] - (rk[n - 1] if n else 0) for n in range(N + 1)]
    return HomologyReport("hochschild", N, ranks, (time.perf_counter() - start) * 1000, ledger)


def cyclic_cohomology_bicomplex(c: CocyclicData, N: int) -> HomologyReport:
    """HC^n for n <= N from the first-quadrant cyclic bicomplex truncated at total degree N+1."""
    start = time.perf_counter()
    _require_degrees(c, N)
    ledger = []
    for n in range(N + 2):
        if not matrix_power(c.cyclic_inv[n], n + 1) == SparseMatrix.identity(c.dims[n]):
            raise NotCocyclic(f"t_{n}^{n + 1} != id")
    ledger.append({"name": "t^(n+1)=id", "degrees": list(range(N + 2)), "pass": True, "fatal": True})
    b = [coboundary(c, n) for n in range(N + 1)]
    bp = [coboundary(c, n, prime=True) for n in range(N + 1)]
    one_minus = [SparseMatrix.identity(c.dims[n]) - _lam(c, n) for n in range(N + 2)]
    norm = [_norm(c, n) for n in range(N + 2)]
    for n in range(N):
        if not (b[n + 1] @ b[n]).is_zero():
            raise NotAComplex(f"b^2 != 0 from degree {n}")
        if not (bp[n + 1] @ bp[n]).is_zero():
            raise NotAComplex(f"b'^2 != 0 from degree {n}")
    for n in range(N + 1):
        if not bp[n] @ one_minus[n] == one_minus[n + 1] @ b[n]:
            raise NotAComplex(f"b'(1-lambda) != (1-lambda)b in degree {n}")
        if not b[n] @ norm[n] == norm[n + 1] @ bp[n]:
            raise NotAComplex(f"bN != Nb' in degree {n}")
    ledger.append({"name": "bicomplex squares", "degrees": list(range(N + 1)), "pass": True, "fatal": True})

    def vertical(p, q):
        return b[q] if p % 2 == 0 else -bp[q]

    def horizontal(p, q):
        return one_minus[q] if p % 2 == 0 else norm[q]

    def total(n):
        # Tot^n -> Tot^(n+1); Tot^n = sum over columns p = 0..n of C^(n-p)
        row_dims = [c.dims[n + 1 - p] for p in range(n + 2)]
        col_dims = [c.dims[n - p] for p in range(n + 1)]
        blocks = {}
        for p in range(n + 1):
            q = n - p
            blocks[(p, p)] = vertical(p, q)
            blocks[(p + 1, p)] = horizontal(p, q)
        return block_matrix(blocks, row_dims, col_dims)

    D = [total(n) for n in range(N + 1)]
    for n in range(N):
        if not (D[n + 1] @ D[n]).is_zero():
            raise NotAComplex(f"total differential squares to nonzero in degree {n}")
    ledger.append({"name": "D^2=0 (total)", "degrees": list(range(N)), "pass": True, "fatal": True})
    rk = [rank(d) for d in D]
    ranks = []
    for n in range(N + 1):
        dim_tot = sum(c.dims[n - p] for p in range(n + 1))
        ranks.append(dim_tot - rk[n] - (rk[n - 1] if n else 0))
    return HomologyReport("cyclic", N, ranks, (time.perf_counter() - start) * 1000, ledger)
