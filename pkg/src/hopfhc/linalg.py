"""Exact sparse linear algebra over Q or Q(q).

Vectors are ``dict[int, scalar]`` with no stored zeros. Matrices keep their
columns as such vectors, since every operator in the package is assembled
by applying it to basis vectors. Reduced row-echelon forms are canonical,
so every basis returned here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

Vector = dict  # index -> nonzero scalar


def vec_axpy(y: Vector, a, x: Vector) -> None:
    """In place: y += a * x."""
    for i, v in x.items():
        s = y.get(i)
        if s is None:
            y[i] = a * v
        else:
            s = s + a * v
            if s:
                y[i] = s
            else:
                del y[i]


def vec_scale(a, x: Vector) -> Vector:
    if not a:
        return {}
    return {i: a * v for i, v in x.items()}


def vec_sub(x: Vector, y: Vector) -> Vector:
    out = dict(x)
    vec_axpy(out, -1, y)
    return out


class SparseMatrix:
    """A rows x cols matrix stored column-wise."""

    __slots__ = ("rows", "cols", "columns")

    def __init__(self, rows: int, cols: int, columns: Optional[dict] = None):
        self.rows = rows
        self.cols = cols
        self.columns = {}
        for j, col in (columns or {}).items():
            if not 0 <= j < cols:
                raise IndexError(f"column {j} out of range")
            col = {i: v for i, v in col.items() if v}
            for i in col:
                if not 0 <= i < rows:
                    raise IndexError(f"row {i} out of range")
            if col:
                self.columns[j] = col

    @classmethod
    def from_dense(cls, rows_list) -> "SparseMatrix":
        nrows = len(rows_list)
        ncols = len(rows_list[0]) if nrows else 0
        columns: dict = {}
        for i, row in enumerate(rows_list):
            for j, v in enumerate(row):
                if v:
                    columns.setdefault(j, {})[i] = v
        return cls(nrows, ncols, columns)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @property
    def entries(self) -> dict:
        return {(i, j): v for j, col in self.columns.items() for i, v in col.items()}

    def column(self, j: int) -> Vector:
        return self.columns.get(j, {})

    def row_vectors(self) -> list:
        out = [dict() for _ in range(self.rows)]
        for j in sorted(self.columns):
            for i, v in self.columns[j].items():
                out[i][j] = v
        return out

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for j, a in v.items():
            col = self.columns.get(j)
            if col:
                vec_axpy(out, a, col)
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return SparseMatrix(
            self.rows, other.cols, {j: self.apply(col) for j, col in other.columns.items()}
        )

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = {j: dict(c) for j, c in self.columns.items()}
        for j, c in other.columns.items():
            vec_axpy(cols.setdefault(j, {}), 1, c)
        return SparseMatrix(self.rows, self.cols, cols)

    def __neg__(self) -> "SparseMatrix":
        return self.scaled(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scaled(self, a) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, {j: vec_scale(a, c) for j, c in self.columns.items()})

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, dict(enumerate(self.row_vectors())))

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not self.columns

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.columns == other.columns

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={sum(map(len, self.columns.values()))})"


def block_matrix(blocks, row_dims, col_dims) -> SparseMatrix:
    """Assemble ``blocks[(r, c)]`` into one matrix with the given block sizes."""
    row_off = [0]
    for d in row_dims:
        row_off.append(row_off[-1] + d)
    col_off = [0]
    for d in col_dims:
        col_off.append(col_off[-1] + d)
    columns: dict = {}
    for (r, c), m in blocks.items():
        if m.shape != (row_dims[r], col_dims[c]):
            raise ValueError(f"block {(r, c)} has shape {m.shape}")
        for j, col in m.columns.items():
            target = columns.setdefault(col_off[c] + j, {})
            for i, v in col.items():
                vec_axpy(target, 1, {row_off[r] + i: v})
    return SparseMatrix(row_off[-1], col_off[-1], columns)


class Echelon:
    """Incrementally maintained reduced row-echelon basis of a subspace."""

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.pivots: dict = {}  # pivot column -> normalized row vector
        self._by_col: dict = {}  # column -> set of pivots whose rows touch it

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: Vector) -> Vector:
        """Residual of v modulo the current span (no pivot coordinates left)."""
        v = dict(v)
        hits = [c for c in v if c in self.pivots]
        while hits:
            for c in hits:
                a = v.get(c)
                if a:
                    vec_axpy(v, -a, self.pivots[c])
            hits = [c for c in v if c in self.pivots]
        return v

    def add(self, v: Vector) -> Optional[Vector]:
        """Insert v; return the residual if it enlarged the span, else None."""
        r = self.reduce(v)
        if not r:
            return None
        c = min(r)
        lead = r[c]
        if lead != 1:
            r = vec_scale(Fraction(1) / lead, r)
        for p in list(self._by_col.get(c, ())):
            row = self.pivots[p]
            a = row.get(c)
            if a:
                old = set(row)
                vec_axpy(row, -a, r)
                for k in old - set(row):
                    self._by_col[k].discard(p)
                for k in set(row) - old:
                    self._by_col.setdefault(k, set()).add(p)
        self.pivots[c] = r
        for k in r:
            if k != c:
                self._by_col.setdefault(k, set()).add(c)
        return dict(r)

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def basis(self) -> "SubspaceBasis":
        cols = sorted(self.pivots)
        return SubspaceBasis(self.ambient_dim, [dict(sorted(self.pivots[c].items())) for c in cols])


@dataclass(frozen=True)
class SubspaceBasis:
    ambient_dim: int
    vectors: list = field(default_factory=list)

    @property
    def pivots(self) -> list:
        return [min(v) for v in self.vectors]

    def __len__(self):
        return len(self.vectors)

    def echelon(self) -> Echelon:
        e = Echelon(self.ambient_dim)
        for v in self.vectors:
            e.pivots[min(v)] = dict(v)
            for k in v:
                if k != min(v):
                    e._by_col.setdefault(k, set()).add(min(v))
        return e


def echelonize(ambient_dim: int, vectors: Iterable[Vector]) -> SubspaceBasis:
    e = Echelon(ambient_dim)
    for v in vectors:
        e.add(v)
    return e.basis()


def rank(m: SparseMatrix) -> int:
    e = Echelon(m.cols)
    for row in m.row_vectors():
        if row:
            e.add(row)
    return len(e)


def kernel_basis(m: SparseMatrix) -> SubspaceBasis:
    e = Echelon(m.cols)
    for row in m.row_vectors():
        if row:
            e.add(row)
    pivot_rows = e.pivots
    free = [j for j in range(m.cols) if j not in pivot_rows]
    vectors = []
    for f in free:
        v = {f: 1}
        for p, row in pivot_rows.items():
            a = row.get(f)
            if a:
                v[p] = -a
        vectors.append(v)
    return echelonize(m.cols, vectors)


def quotient_projection(ambient_dim: int, generators: Iterable[Vector]):
    """Quotient of k^ambient_dim by span(generators).

    Returns (representatives, projection): the non-pivot coordinates of the
    echelonized span, and the matrix sending an ambient vector to its coset
    coordinates in that order.
    """
    basis = echelonize(ambient_dim, generators)
    return _projection_from_basis(basis)


def _projection_from_basis(basis: SubspaceBasis):
    pivot_rows = {min(v): v for v in basis.vectors}
    reps = [j for j in range(basis.ambient_dim) if j not in pivot_rows]
    pos = {j: i for i, j in enumerate(reps)}
    columns = {}
    for j in range(basis.ambient_dim):
        row = pivot_rows.get(j)
        if row is None:
            columns[j] = {pos[j]: 1}
        else:
            col = {pos[f]: -a for f, a in row.items() if f != j}
            if col:
                columns[j] = col
    return reps, SparseMatrix(len(reps), basis.ambient_dim, columns)


def membership(v: Vector, basis: SubspaceBasis) -> Optional[list]:
    """Coefficients of v in the given basis, or None if v is not in the span."""
    if v and max(v) >= basis.ambient_dim:
        raise ValueError("vector dimension does not match basis")
    coeffs = [v.get(min(b), 0) for b in basis.vectors]
    residual = dict(v)
    for a, b in zip(coeffs, basis.vectors):
        if a:
            vec_axpy(residual, -a, b)
    if residual:
        return None
    return coeffs


def matrix_inverse(m: SparseMatrix) -> SparseMatrix:
    """Exact inverse of a square matrix (Gauss-Jordan on [m | I])."""
    n = m.rows
    if m.cols != n:
        raise ValueError("matrix not square")
    e = Echelon(2 * n)
    for i, row in enumerate(m.row_vectors()):
        aug = dict(row)
        aug[n + i] = 1
        e.add(aug)
    if any(c not in e.pivots for c in range(n)):
        raise ZeroDivisionError("matrix is singular")
    columns: dict = {}
    for i in range(n):
        for k, a in e.pivots[i].items():
            if k >= n:
                columns.setdefault(k - n, {})[i] = a
    return SparseMatrix(n, n, columns)


def charpoly(m: SparseMatrix) -> list:
    """Characteristic polynomial det(xI - m), coefficients low -> high.

    Faddeev-LeVerrier recursion; exact over a field of characteristic 0.
    """
    n = m.rows
    if m.cols != n:
        raise ValueError("matrix not square")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = SparseMatrix.identity(n)
    mk = SparseMatrix.zero(n, n)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scaled(coeffs[n - k + 1]))
        trace = sum((mk.columns.get(i, {}).get(i, 0) for i in range(n)), 0)
        coeffs[n - k] = -trace * Fraction(1, k)
    return coeffs


def matrix_power(m: SparseMatrix, e: int) -> SparseMatrix:
    out = SparseMatrix.identity(m.rows)
    for _ in range(e):
        out = m @ out
    return out
