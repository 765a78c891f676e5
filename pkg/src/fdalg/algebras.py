"""Structure-constant model of a finite-dimensional unital associative algebra.

An ``Algebra`` owns a dense tensor c[i][j][k] with b_i · b_j = sum_k c[i][j][k] b_k,
a distinguished unit vector, and a provenance tag.  Elements are coordinate
vectors tied to their parent algebra by identity, so cross-algebra arithmetic
fails loudly rather than silently mixing tensors.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple

from . import _numutil
from .errors import AmbientMismatch, BadParameter, NotAGroup, NotIdempotent, ParentMismatch
from .fields import Field
from .linalg import Matrix, Subspace, echelon_for, span
from . import linalg

VALIDATE_FULL_CAP = 64


@dataclass(frozen=True)
class Provenance:
    kind: str  # "generic" | "quiver" | "group"
    # quiver: vertex idempotent coordinate vectors and arrow-ideal basis rows
    vertex_idempotents: Optional[Tuple[Tuple, ...]] = None
    arrow_ideal_rows: Optional[Tuple[Tuple, ...]] = None
    # group: order and conjugacy-class partition of basis indices
    group_order: Optional[int] = None
    conjugacy_classes: Optional[Tuple[Tuple[int, ...], ...]] = None


GENERIC = Provenance("generic")


@dataclass
class ValidationReport:
    ok: bool
    associativity_failures: List[Tuple[int, int, int]]
    unit_failures: List[int]
    checked_all_triples: bool

    def __bool__(self):
        return self.ok


class Element:
    """A coordinate vector over a named parent algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "Algebra", coords: Sequence):
        if len(coords) != algebra.dim:
            raise AmbientMismatch(f"coordinate length {len(coords)} vs dim {algebra.dim}")
        self.algebra = algebra
        self.coords = tuple(algebra.field.coerce(x) for x in coords)

    def _check(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise ParentMismatch("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        F = self.algebra.field
        return Element(self.algebra, tuple(F.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        F = self.algebra.field
        return Element(self.algebra, tuple(F.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __neg__(self):
        F = self.algebra.field
        return Element(self.algebra, tuple(F.neg(a) for a in self.coords))

    def scale(self, scalar):
        F = self.algebra.field
        s = F.coerce(scalar)
        return Element(self.algebra, tuple(F.mul(s, a) for a in self.coords))

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        fmt = self.algebra.field.format_scalar
        return "Element(" + ", ".join(fmt(c) for c in self.coords) + ")"


class Algebra:
    """Finite-dimensional unital associative algebra over F_p or Q."""

    def __init__(self, field: Field, mul, unit, provenance: Provenance = GENERIC):
        d = len(mul)
        if d == 0:
            raise BadParameter("dimension must be positive")
        self.field = field
        self.dim = d
        self.mul = tuple(
            tuple(tuple(field.coerce(x) for x in row) for row in plane) for plane in mul
        )
        for plane in self.mul:
            if len(plane) != d or any(len(row) != d for row in plane):
                raise BadParameter("structure tensor is not d x d x d")
        self.unit = tuple(field.coerce(x) for x in unit)
        if len(self.unit) != d:
            raise BadParameter("unit vector length mismatch")
        self.provenance = provenance
        self._cache: dict = {}

    # -- fast-path plumbing ------------------------------------------------

    @property
    def _np_ok(self) -> bool:
        return self.field.is_prime_field and _numutil.usable(self.field.p, self.dim)

    @property
    def _np_tensor(self):
        t = self._cache.get("np_tensor")
        if t is None:
            t = _numutil.tensor_from_mul(self.mul, self.field.p)
            self._cache["np_tensor"] = t
        return t

    @property
    def _np_left_stack(self):
        """L[i] = matrix of left multiplication by b_i (maps coords to coords)."""
        s = self._cache.get("np_left")
        if s is None:
            c = self._np_tensor
            s = c.transpose(0, 2, 1).copy()  # L_i[k, j] = c[i, j, k]
            self._cache["np_left"] = s
        return s

    @property
    def _np_flat_float(self):
        """tensor reshaped (d, d*d) as float64, exact for the usable p range."""
        import numpy as np

        s = self._cache.get("np_flat_float")
        if s is None:
            s = self._np_tensor.reshape(self.dim, self.dim * self.dim).astype(np.float64)
            self._cache["np_flat_float"] = s
        return s

    # -- elements ------------------------------------------------------------

    def element(self, coords) -> Element:
        return Element(self, coords)

    def basis_element(self, i: int) -> Element:
        z = self.field.zero()
        coords = [z] * self.dim
        coords[i] = self.field.one()
        return Element(self, coords)

    def unit_element(self) -> Element:
        return Element(self, self.unit)

    def zero_element(self) -> Element:
        return Element(self, [self.field.zero()] * self.dim)

    def basis(self) -> List[Element]:
        return [self.basis_element(i) for i in range(self.dim)]

    # -- multiplication -------------------------------------------------------

    def multiply_coords(self, x: Sequence, y: Sequence) -> Tuple:
        if self._np_ok:
            import numpy as np

            p = self.field.p
            d = self.dim
            xv = np.asarray([float(v) for v in x])
            yv = np.asarray([float(v) for v in y])
            t = xv @ self._np_flat_float  # t[j*d + k] = sum_i x_i c[i,j,k]
            t = (np.rint(t).astype(np.int64) % p).reshape(d, d)
            out = np.rint(yv @ t.astype(np.float64)).astype(np.int64) % p
            return tuple(int(v) for v in out)
        F = self.field
        out = [F.zero()] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            plane = self.mul[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = F.mul(xi, yj)
                row = plane[j]
                for k, ck in enumerate(row):
                    if ck:
                        out[k] = F.add(out[k], F.mul(c, ck))
        return tuple(out)

    def multiply(self, x: Element, y: Element) -> Element:
        if x.algebra is not self or y.algebra is not self:
            raise ParentMismatch("elements do not belong to this algebra")
        return Element(self, self.multiply_coords(x.coords, y.coords))

    def _np_left(self, x):
        """Left multiplication matrix as an int64 array (prime fields only)."""
        import numpy as np

        p = self.field.p
        xv = np.asarray([int(v) for v in x], dtype=np.int64)
        t = np.tensordot(xv, self._np_tensor, axes=([0], [0])) % p  # t[j, k]
        return t.T.copy()

    def _np_right(self, x):
        import numpy as np

        p = self.field.p
        xv = np.asarray([int(v) for v in x], dtype=np.int64)
        t = np.tensordot(xv, self._np_tensor, axes=([0], [1])) % p  # t[i, k]
        return t.T.copy()

    def left_regular_coords(self, x: Sequence) -> Matrix:
        """Matrix of y -> x·y in coordinates (columns are images of basis)."""
        F = self.field
        if self._np_ok:
            m = self._np_left(x)
            return Matrix(F, self.dim, self.dim,
                          tuple(tuple(int(v) for v in row) for row in m))
        cols = []
        for j in range(self.dim):
            col = [F.zero()] * self.dim
            for i, xi in enumerate(x):
                if xi:
                    row = self.mul[i][j]
                    for k, ck in enumerate(row):
                        if ck:
                            col[k] = F.add(col[k], F.mul(xi, ck))
            cols.append(col)
        rows = tuple(tuple(cols[j][k] for j in range(self.dim)) for k in range(self.dim))
        return Matrix(F, self.dim, self.dim, rows)

    def right_regular_coords(self, x: Sequence) -> Matrix:
        """Matrix of y -> y·x in coordinates."""
        F = self.field
        if self._np_ok:
            m = self._np_right(x)
            return Matrix(F, self.dim, self.dim,
                          tuple(tuple(int(v) for v in row) for row in m))
        rows_out = [[F.zero()] * self.dim for _ in range(self.dim)]
        for j, xj in enumerate(x):
            if not xj:
                continue
            for i in range(self.dim):
                row = self.mul[i][j]
                for k, ck in enumerate(row):
                    if ck:
                        rows_out[k][i] = F.add(rows_out[k][i], F.mul(xj, ck))
        return Matrix(F, self.dim, self.dim, tuple(tuple(r) for r in rows_out))

    def left_regular(self, x: Element) -> Matrix:
        if x.algebra is not self:
            raise ParentMismatch("element of another algebra")
        return self.left_regular_coords(x.coords)

    def right_regular(self, x: Element) -> Matrix:
        if x.algebra is not self:
            raise ParentMismatch("element of another algebra")
        return self.right_regular_coords(x.coords)

    def power(self, x: Element, e: int) -> Element:
        if e < 0:
            raise BadParameter("negative power")
        acc = self.unit_element()
        base = x
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- validation -------------------------------------------------------

    def validate(self, full: Optional[bool] = None, sample_seed: int = 0) -> ValidationReport:
        """Check associativity and two-sided unit on basis triples.

        Full O(d^5) verification up to dim 64 by default; beyond that a seeded
        sample of triples is used unless ``full=True`` forces the whole check.
        """
        d = self.dim
        if full is None:
            full = d <= VALIDATE_FULL_CAP
        unit_failures = []
        u = self.unit
        for i in range(d):
            b = [self.field.zero()] * d
            b[i] = self.field.one()
            if self.multiply_coords(u, b) != tuple(b) or self.multiply_coords(b, u) != tuple(b):
                unit_failures.append(i)
        assoc_failures: List[Tuple[int, int, int]] = []
        if full and self._np_ok:
            import numpy as np

            p = self.field.p
            c = self._np_tensor.astype(np.float64)
            flat = c.reshape(d * d, d)
            # (b_i b_j) b_k: rows (i,j), inner m, cols (k,l)
            left = np.rint(flat @ c.reshape(d, d * d)).astype(np.int64) % p
            left = left.reshape(d, d, d, d)  # (i, j, k, l)
            # b_i (b_j b_k): rows (j,k), inner m, cols (i,l), then to (i, j, k, l)
            right = np.rint(flat @ c.transpose(1, 0, 2).reshape(d, d * d)).astype(np.int64) % p
            right = right.reshape(d, d, d, d).transpose(2, 0, 1, 3)
            bad = np.argwhere((left != right).any(axis=3))
            assoc_failures = [tuple(map(int, t)) for t in bad[:50]]
        else:
            triples = self._validate_triples(full, sample_seed)
            for (i, j, k) in triples:
                bi, bj, bk = (self._unit_vec(i), self._unit_vec(j), self._unit_vec(k))
                lhs = self.multiply_coords(self.multiply_coords(bi, bj), bk)
                rhs = self.multiply_coords(bi, self.multiply_coords(bj, bk))
                if lhs != rhs:
                    assoc_failures.append((i, j, k))
                    if len(assoc_failures) >= 50:
                        break
        ok = not assoc_failures and not unit_failures
        return ValidationReport(ok, assoc_failures, unit_failures, full)

    def _unit_vec(self, i: int):
        v = [self.field.zero()] * self.dim
        v[i] = self.field.one()
        return tuple(v)

    def _validate_triples(self, full: bool, seed: int):
        d = self.dim
        if full:
            return [(i, j, k) for i in range(d) for j in range(d) for k in range(d)]
        import random

        rng = random.Random(seed)
        return [(rng.randrange(d), rng.randrange(d), rng.randrange(d)) for _ in range(4096)]

    # -- derived subspaces -----------------------------------------------

    def center(self) -> Subspace:
        """x with x·b_j = b_j·x for all j: kernel of the (d^2 x d) difference system."""
        cached = self._cache.get("center")
        if cached is not None:
            return cached
        d = self.dim
        F = self.field
        rows = []
        for j in range(d):
            for k in range(d):
                row = tuple(F.sub(self.mul[i][j][k], self.mul[j][i][k]) for i in range(d))
                if any(row):
                    rows.append(row)
        if not rows:
            result = linalg.full_subspace(F, d)
        else:
            m = Matrix(F, len(rows), d, tuple(rows))
            result = linalg.kernel(m)
        self._cache["center"] = result
        return result

    def k_star(self) -> int:
        return self.center().dim

    def is_commutative(self) -> bool:
        d = self.dim
        return all(
            self.mul[i][j] == self.mul[j][i] for i in range(d) for j in range(i + 1, d)
        )

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field}, provenance={self.provenance.kind})"


# -- constructions ----------------------------------------------------------


def matrix_algebra(field: Field, n: int) -> Algebra:
    """Full matrix algebra M_n(F) on the basis of matrix units, row-major."""
    if n < 1:
        raise BadParameter("n must be positive")
    d = n * n
    z, o = field.zero(), field.one()
    mul = [[[z] * d for _ in range(d)] for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        mul[a * n + b][c * n + e][a * n + e] = o
    unit = [z] * d
    for a in range(n):
        unit[a * n + a] = o
    return Algebra(field, mul, unit)


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    if a.field != b.field:
        raise BadParameter("direct sum over different fields")
    F = a.field
    d = a.dim + b.dim
    z = F.zero()
    mul = [[[z] * d for _ in range(d)] for _ in range(d)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                c = a.mul[i][j][k]
                if c:
                    mul[i][j][k] = c
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                c = b.mul[i][j][k]
                if c:
                    mul[a.dim + i][a.dim + j][a.dim + k] = c
    unit = list(a.unit) + list(b.unit)
    return Algebra(F, mul, unit)


def corner_data(a: Algebra, e: Element) -> Tuple[Algebra, List[Tuple]]:
    """The corner algebra eAe plus its basis rows in A-coordinates."""
    if e.algebra is not a:
        raise ParentMismatch("idempotent from another algebra")
    if a.multiply(e, e) != e:
        raise NotIdempotent("e·e != e")
    F = a.field
    le = a.left_regular_coords(e.coords)
    re = a.right_regular_coords(e.coords)
    proj = le.matmul(re)  # x -> e·x·e
    images = proj.transpose().entries
    sub = span(F, a.dim, images)
    rows = sub.basis_vectors()
    m = len(rows)
    if m == 0:
        raise NotIdempotent("corner of zero idempotent")
    mul = []
    for x in rows:
        plane = []
        for y in rows:
            prod = a.multiply_coords(x, y)
            coords = sub.coords_of(prod)
            assert coords is not None, "corner not multiplicatively closed"
            plane.append(list(coords))
        mul.append(plane)
    unit = sub.coords_of(e.coords)
    assert unit is not None
    return Algebra(F, mul, unit), rows


def corner(a: Algebra, e: Element) -> Algebra:
    return corner_data(a, e)[0]


def group_algebra_from_cayley(field: Field, table: Sequence[Sequence[int]]) -> Algebra:
    """Group algebra FG from an n x n Cayley table (index 0 = identity)."""
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    tab = [list(map(int, row)) for row in table]
    for row in tab:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise NotAGroup("closure", "entries must be indices 0..n-1")
    for j in range(n):
        if tab[0][j] != j:
            raise NotAGroup("identity", f"row 0 must be the identity row (col {j})")
    for i in range(n):
        if tab[i][0] != i:
            raise NotAGroup("identity", f"column 0 must be the identity column (row {i})")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if tab[tab[i][j]][k] != tab[i][tab[j][k]]:
                    raise NotAGroup("associativity", f"({i}·{j})·{k} != {i}·({j}·{k})")
    inv = [None] * n
    for i in range(n):
        for j in range(n):
            if tab[i][j] == 0:
                inv[i] = j
                break
        if inv[i] is None or tab[inv[i]][i] != 0:
            raise NotAGroup("inverses", f"element {i} has no two-sided inverse")
    seen = [False] * n
    classes = []
    for g in range(n):
        if seen[g]:
            continue
        orbit = sorted({tab[tab[h][g]][inv[h]] for h in range(n)})
        for x in orbit:
            seen[x] = True
        classes.append(tuple(orbit))
    z, o = field.zero(), field.one()
    mul = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mul[i][j][tab[i][j]] = o
    unit = [o] + [z] * (n - 1)
    prov = Provenance("group", group_order=n, conjugacy_classes=tuple(classes))
    return Algebra(field, mul, unit, prov)
