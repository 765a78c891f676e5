"""Exact dense linear algebra over F_p and Q.

Everything downstream (radicals, commutator spaces, Cartan data) reduces to
the operations here.  Subspaces are stored only as reduced row echelon bases,
so two subspaces are equal iff their ``Subspace`` values compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from . import _kernels
from .errors import AmbientMismatch
from .fields import Field


def echelon_for(field: Field, width: int):
    """New incremental RREF accumulator over the given field."""
    if field.is_prime_field:
        return _kernels.fp_echelon(width, field.p)
    return _kernels.q_echelon(width)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with exact entries."""

    field: Field
    rows: int
    cols: int
    entries: Tuple[Tuple[object, ...], ...]

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence]) -> "Matrix":
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise AmbientMismatch("ragged rows")
        return Matrix(field, len(data), ncols, data)

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def row(self, i: int) -> Tuple:
        return self.entries[i]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      tuple(zip(*self.entries)) if self.entries else ())

    def apply(self, vec: Sequence) -> Tuple:
        """Matrix-vector product M·v (v a column vector)."""
        if len(vec) != self.cols:
            raise AmbientMismatch(f"vector length {len(vec)} vs {self.cols} columns")
        F = self.field
        out = []
        for row in self.entries:
            acc = F.zero()
            for a, x in zip(row, vec):
                if a and x:
                    acc = F.add(acc, F.mul(a, x))
            out.append(acc)
        return tuple(out)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise AmbientMismatch("inner dimensions differ")
        F = self.field
        ot = other.transpose().entries
        data = []
        for row in self.entries:
            out = []
            for col in ot:
                acc = F.zero()
                for a, b in zip(row, col):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                out.append(acc)
            data.append(tuple(out))
        return Matrix(F, self.rows, other.cols, tuple(data))

    def __str__(self):
        fmt = self.field.format_scalar
        return "\n".join(" ".join(fmt(x) for x in row) for row in self.entries)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^d, stored as its unique RREF basis (zero rows dropped)."""

    field: Field
    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> Tuple[int, ...]:
        pivs = []
        for row in self.basis.entries:
            for i, x in enumerate(row):
                if x:
                    pivs.append(i)
                    break
        return tuple(pivs)

    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def _accumulator(self):
        # reduction state is pure function of the basis; cache it on the instance
        acc = getattr(self, "_acc_cache", None)
        if acc is None:
            acc = echelon_for(self.field, self.ambient_dim)
            for row in self.basis.entries:
                acc.insert(list(row))
            object.__setattr__(self, "_acc_cache", acc)
        return acc

    def reduce(self, vec: Sequence) -> Tuple:
        """Remainder of ``vec`` after reduction by the basis."""
        if len(vec) != self.ambient_dim:
            raise AmbientMismatch(f"vector length {len(vec)} vs ambient {self.ambient_dim}")
        red = self._accumulator().reduce([self.field.coerce(x) for x in vec])
        return tuple(red)

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def coords_of(self, vec: Sequence) -> Optional[Tuple]:
        """Coordinates of ``vec`` in the RREF basis, or None if outside.

        With a fully reduced basis the coefficient of row j is just the
        entry of ``vec`` at that row's pivot column.
        """
        vec = tuple(self.field.coerce(x) for x in vec)
        coords = tuple(vec[p] for p in self.pivots)
        F = self.field
        residual = list(vec)
        for c, row in zip(coords, self.basis.entries):
            if c:
                for k, b in enumerate(row):
                    if b:
                        residual[k] = F.sub(residual[k], F.mul(c, b))
        if any(residual):
            return None
        return coords

    def complement_positions(self) -> Tuple[int, ...]:
        """Coordinate positions whose unit vectors complement this subspace."""
        pivs = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in pivs)

    def basis_vectors(self) -> List[Tuple]:
        return [tuple(row) for row in self.basis.entries]

    def __le__(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch("ambient dimensions differ")
        return all(other.contains(row) for row in self.basis.entries)


def _accumulate(field: Field, width: int, vectors: Iterable[Sequence]):
    acc = echelon_for(field, width)
    for v in vectors:
        acc.insert([field.coerce(x) for x in v])
    return acc


def _subspace_from_acc(field: Field, width: int, acc) -> Subspace:
    rows = tuple(tuple(field.coerce(x) for x in row) for row in acc.rows())
    return Subspace(field, width, Matrix(field, len(rows), width, rows))


def span(field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
    return _subspace_from_acc(field, ambient_dim, _accumulate(field, ambient_dim, vectors))


def zero_subspace(field: Field, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, Matrix(field, 0, ambient_dim, ()))


def full_subspace(field: Field, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, Matrix.identity(field, ambient_dim))


def rref(m: Matrix) -> Tuple[Matrix, int, List[int]]:
    """Unique reduced row echelon form of m, with rank and pivot columns.

    The result keeps the shape of m (zero rows at the bottom).
    """
    acc = _accumulate(m.field, m.cols, m.entries)
    rows = [tuple(m.field.coerce(x) for x in row) for row in acc.rows()]
    z = m.field.zero()
    while len(rows) < m.rows:
        rows.append(tuple(z for _ in range(m.cols)))
    return Matrix(m.field, m.rows, m.cols, tuple(rows)), acc.rank, acc.pivots()


def kernel(m: Matrix) -> Subspace:
    """The solution space {v : M·v = 0}, ambient dimension = cols(M)."""
    red, rank, pivots = rref(m)
    n = m.cols
    free = [j for j in range(n) if j not in set(pivots)]
    F = m.field
    vecs = []
    for f in free:
        v = [F.zero()] * n
        v[f] = F.one()
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(red.entries[r][f])
        vecs.append(v)
    return span(F, n, vecs)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    return span(u.field, u.ambient_dim, list(u.basis.entries) + list(v.basis.entries))


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked-basis coefficient system.

    Row vectors (a | b) with a·U = b·V form the kernel of [U; V]^T; the
    intersection is the image of the a-part.
    """
    if u.ambient_dim != v.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    F = u.field
    ru, rv = u.dim, v.dim
    if ru == 0 or rv == 0:
        return zero_subspace(F, u.ambient_dim)
    stacked = Matrix(F, ru + rv, u.ambient_dim,
                     tuple(list(u.basis.entries) + list(v.basis.entries)))
    null = kernel(stacked.transpose())
    vecs = []
    for row in null.basis.entries:
        a = row[:ru]
        vec = [F.zero()] * u.ambient_dim
        for coeff, brow in zip(a, u.basis.entries):
            if coeff:
                for k, x in enumerate(brow):
                    if x:
                        vec[k] = F.add(vec[k], F.mul(coeff, x))
        vecs.append(vec)
    return span(F, u.ambient_dim, vecs)


def contains(u: Subspace, vec: Sequence) -> bool:
    return u.contains(vec)


def codim(u: Subspace) -> int:
    return u.codim()


def solve_in_span(field: Field, rows: Sequence[Sequence], target: Sequence) -> Optional[List]:
    """Express ``target`` as a combination of ``rows``; None if impossible.

    Augmented-echelon bookkeeping: each inserted row carries an indicator
    tail, and rows whose leading part reduces to zero are skipped, so stored
    pivots stay in the leading block and the tail of the reduced probe reads
    off the (negated) coefficients.
    """
    width = len(target)
    m = len(rows)
    acc = echelon_for(field, width + m)
    zero = field.zero()
    one = field.one()
    kept = []
    for idx, row in enumerate(rows):
        if len(row) != width:
            raise AmbientMismatch("row length mismatch")
        aug = [field.coerce(x) for x in row] + [zero] * m
        aug[width + idx] = one
        red = acc.reduce(aug)
        if any(red[:width]):
            acc.insert(red)
            kept.append(idx)
    probe = [field.coerce(x) for x in target] + [zero] * m
    red = acc.reduce(probe)
    if any(red[:width]):
        return None
    return [field.neg(field.coerce(c)) for c in red[width:]]
