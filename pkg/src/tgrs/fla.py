"""Dense linear algebra over a finite field.

Matrices hold element encodings as nested Python lists; the sizes that occur
for twisted codes are small, and row operations go through the field's
log/exp tables.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import DimensionMismatch, DivisionByZero, FieldMismatch
from .gf import Embedding, Field, FieldElement


class MatrixGF:
    """An r x c matrix over a Field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable]) -> None:
        self.field = field
        self.rows = [[field(x).value for x in row] for row in rows]
        if self.rows and any(len(r) != len(self.rows[0]) for r in self.rows):
            raise DimensionMismatch("ragged rows")

    @classmethod
    def _raw(cls, field: Field, rows: list[list[int]]) -> MatrixGF:
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        return m

    @classmethod
    def zeros(cls, field: Field, r: int, c: int) -> MatrixGF:
        return cls._raw(field, [[0] * c for _ in range(r)])

    @classmethod
    def identity(cls, field: Field, n: int) -> MatrixGF:
        return cls._raw(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.shape[1]

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    def row(self, i: int) -> list[FieldElement]:
        return [FieldElement(self.field, v) for v in self.rows[i]]

    def copy(self) -> MatrixGF:
        return MatrixGF._raw(self.field, [list(r) for r in self.rows])

    @property
    def T(self) -> MatrixGF:
        r, c = self.shape
        return MatrixGF._raw(self.field, [[self.rows[i][j] for i in range(r)] for j in range(c)])

    def columns(self, cols: Sequence[int]) -> MatrixGF:
        return MatrixGF._raw(self.field, [[r[j] for j in cols] for r in self.rows])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> MatrixGF:
        return MatrixGF._raw(self.field, [[self.rows[i][j] for j in cols] for i in rows])

    def _check(self, other: MatrixGF) -> None:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field.name} vs {other.field.name}")

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixGF) and self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, tuple(map(tuple, self.rows))))

    def __add__(self, other: MatrixGF) -> MatrixGF:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        add = self.field.add
        return MatrixGF._raw(
            self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> MatrixGF:
        neg = self.field.neg
        return MatrixGF._raw(self.field, [[neg(a) for a in r] for r in self.rows])

    def __sub__(self, other: MatrixGF) -> MatrixGF:
        return self + (-other)

    def scale(self, c) -> MatrixGF:
        cv = self.field(c).value
        return MatrixGF._raw(self.field, [self.field.scale(cv, r) for r in self.rows])

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = other.T.rows
        dot = self.field.dot
        return MatrixGF._raw(self.field, [[dot(r, c) for c in cols] for r in self.rows])

    def apply(self, v: Sequence) -> list[FieldElement]:
        """Matrix-vector product M v."""
        vv = [self.field(x).value for x in v]
        if len(vv) != self.ncols:
            raise DimensionMismatch(f"{self.shape} times vector of length {len(vv)}")
        return [FieldElement(self.field, self.field.dot(r, vv)) for r in self.rows]

    def hstack(self, other: MatrixGF) -> MatrixGF:
        self._check(other)
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack needs equal row counts")
        return MatrixGF._raw(self.field, [a + b for a, b in zip(self.rows, other.rows)])

    def vstack(self, other: MatrixGF) -> MatrixGF:
        self._check(other)
        if self.rows and other.rows and self.ncols != other.ncols:
            raise DimensionMismatch("vstack needs equal column counts")
        return MatrixGF._raw(self.field, [list(r) for r in self.rows + other.rows])

    def map(self, emb: Embedding) -> MatrixGF:
        return MatrixGF._raw(emb.sup, [[emb.map_value(a) for a in r] for r in self.rows])

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple[MatrixGF, int, list[int]]:
        """Reduced row echelon form, rank and pivot columns."""
        F = self.field
        R = [list(r) for r in self.rows]
        nr, nc = self.shape
        pivots: list[int] = []
        i = 0
        for j in range(nc):
            if i == nr:
                break
            piv = next((k for k in range(i, nr) if R[k][j]), None)
            if piv is None:
                continue
            R[i], R[piv] = R[piv], R[i]
            if R[i][j] != 1:
                R[i] = F.scale(F.inv(R[i][j]), R[i])
            for k in range(nr):
                if k != i and R[k][j]:
                    R[k] = F.axpy(R[k], R[k][j], R[i])
            pivots.append(j)
            i += 1
        return MatrixGF._raw(F, R), len(pivots), pivots

    def rank(self) -> int:
        F = self.field
        R = [list(r) for r in self.rows]
        nr, nc = self.shape
        rank = 0
        for j in range(nc):
            piv = next((k for k in range(rank, nr) if R[k][j]), None)
            if piv is None:
                continue
            R[rank], R[piv] = R[piv], R[rank]
            inv = F.inv(R[rank][j])
            for k in range(rank + 1, nr):
                if R[k][j]:
                    R[k] = F.axpy(R[k], F.mul(R[k][j], inv), R[rank])
            rank += 1
            if rank == nr:
                break
        return rank

    def kernel(self) -> MatrixGF:
        """Basis of the right null space {v : M v = 0}, one vector per row.

        Each free column of the RREF gives one vector; the basis is returned in
        reduced echelon form.
        """
        F = self.field
        R, _, pivots = self.rref()
        nc = self.ncols
        free = [j for j in range(nc) if j not in set(pivots)]
        basis = []
        for f in free:
            v = [0] * nc
            v[f] = 1
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(R.rows[i][f])
            basis.append(v)
        if not basis:
            return MatrixGF._raw(F, [])
        return MatrixGF._raw(F, basis).rref()[0]

    def det(self) -> FieldElement:
        F = self.field
        nr, nc = self.shape
        if nr != nc:
            raise DimensionMismatch(f"determinant of a {nr}x{nc} matrix")
        R = [list(r) for r in self.rows]
        acc = 1
        for j in range(nr):
            piv = next((k for k in range(j, nr) if R[k][j]), None)
            if piv is None:
                return F.zero
            if piv != j:
                R[j], R[piv] = R[piv], R[j]
                acc = F.neg(acc)
            acc = F.mul(acc, R[j][j])
            inv = F.inv(R[j][j])
            for k in range(j + 1, nr):
                if R[k][j]:
                    R[k] = F.axpy(R[k], F.mul(R[k][j], inv), R[j])
        return FieldElement(F, acc)

    def inverse(self) -> MatrixGF:
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatch("only square matrices are invertible")
        R, _, piv = self.hstack(MatrixGF.identity(self.field, n)).rref()
        if piv[:n] != list(range(n)):
            raise DivisionByZero("singular matrix")
        return R.columns(range(n, 2 * n))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def to_json(self) -> dict:
        r, c = self.shape
        entries = [[FieldElement(self.field, v).to_json() for v in row] for row in self.rows]
        return {"rows": r, "cols": c, "entries": entries}

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> MatrixGF:
        M = cls._raw(field, [[field.parse(x).value for x in r] for r in obj["entries"]])
        if M.shape != (obj["rows"], obj["cols"]) and obj["rows"]:
            raise DimensionMismatch(f"declared {obj['rows']}x{obj['cols']}, got {M.shape}")
        return M

    def __repr__(self) -> str:
        body = "\n".join(
            "[" + ", ".join(str(FieldElement(self.field, v)) for v in r) + "]" for r in self.rows
        )
        return f"MatrixGF over {self.field.name}, shape {self.shape}:\n{body}"


def rref(M: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    return M.rref()


def rank(M: MatrixGF) -> int:
    return M.rank()


def kernel(M: MatrixGF) -> MatrixGF:
    return M.kernel()


def det(M: MatrixGF) -> FieldElement:
    return M.det()


def matmul(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    return A @ B
