"""Radical, semisimple quotient, primitive idempotents, Cartan data.

The Jacobson radical comes from one of three routes: the arrow ideal for
quiver-built algebras, the kernel of the regular trace form in characteristic
zero, and in characteristic p the chain of characteristic-polynomial
coefficient conditions c_{p^i}(L_x L_y) = 0 (the p-power trace method; over a
prime field each stage is an honest linear system).  Every route's output is
checked to be a nilpotent two-sided ideal before it is returned.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import _kernels, _numutil
from .algebras import Algebra, Element, corner_data
from .errors import NotSplit, SplitUndecided
from .fields import Field
from .linalg import Matrix, Subspace, echelon_for, kernel, span
from .polyfactor import (
    degree,
    factor_fp,
    monic,
    poly_divmod,
    poly_eval_element,
    poly_gcd,
    poly_mod,
    poly_mul,
    rational_linear_factors,
    trim,
)

EXHAUSTIVE_SPLIT_CAP = 2 ** 16
RANDOM_SPLIT_TRIES_FP = 256
RANDOM_SPLIT_TRIES_Q = 64


# -- minimal polynomials ----------------------------------------------------


def minimal_polynomial(b: Algebra, z: Sequence) -> List:
    """Monic minimal polynomial of an element, ascending coefficients."""
    F = b.field
    d = b.dim
    width = d + d + 2
    acc = echelon_for(F, width)
    zero = F.zero()
    cur = tuple(b.unit)
    zc = tuple(F.coerce(c) for c in z)
    for k in range(d + 1):
        aug = list(cur) + [zero] * (d + 2)
        aug[d + k] = F.one()
        red = acc.reduce(aug)
        if not any(red[:d]):
            # the probe carries indicator e_k, so z^k + sum red[d+i]·z^i = 0
            coeffs = [F.coerce(red[d + i]) for i in range(k)]
            return coeffs + [F.one()]
        acc.insert(red)
        cur = b.multiply_coords(cur, zc)
    raise RuntimeError("minimal polynomial search exceeded the dimension")


# -- quotient algebras -------------------------------------------------------


@dataclass
class QuotientData:
    """A/I with the section given by the non-pivot coordinate positions."""

    algebra: Algebra
    ideal: Subspace
    positions: Tuple[int, ...]
    _parent: Algebra

    def project(self, vec: Sequence) -> Tuple:
        red = self.ideal.reduce(vec)
        return tuple(red[i] for i in self.positions)

    def lift(self, vec: Sequence) -> Tuple:
        F = self._parent.field
        out = [F.zero()] * self._parent.dim
        for pos, c in zip(self.positions, vec):
            out[pos] = F.coerce(c)
        return tuple(out)


def quotient_algebra(a: Algebra, ideal: Subspace) -> QuotientData:
    F = a.field
    positions = ideal.complement_positions()
    q = len(positions)
    if q == 0:
        raise ValueError("quotient by the whole algebra")
    mul = []
    for r in positions:
        plane = []
        for s in positions:
            red = ideal.reduce(a.mul[r][s])
            plane.append([red[i] for i in positions])
        mul.append(plane)
    red_unit = ideal.reduce(a.unit)
    unit = [red_unit[i] for i in positions]
    return QuotientData(Algebra(F, mul, unit), ideal, positions, a)


# -- radical -----------------------------------------------------------------


def _trace_gram(a: Algebra, vecs: List[Tuple]) -> List[List]:
    """G[x][y] = tr(L_x · L_y) over the given vectors."""
    F = a.field
    if a._np_ok:
        import numpy as np

        p = F.p
        vm = np.array([[int(c) for c in v] for v in vecs], dtype=np.int64)
        ls = np.tensordot(vm, a._np_left_stack, axes=([1], [0])) % p
        g = np.einsum("aij,bji->ab", ls, ls) % p
        return [[int(x) for x in row] for row in g]
    mats = [a.left_regular_coords(v) for v in vecs]
    m = len(vecs)
    out = []
    for x in range(m):
        row = []
        ex = mats[x].entries
        for y in range(m):
            ey = mats[y].entries
            acc = F.zero()
            for i in range(a.dim):
                for j in range(a.dim):
                    if ex[i][j] and ey[j][i]:
                        acc = F.add(acc, F.mul(ex[i][j], ey[j][i]))
            row.append(acc)
        out.append(row)
    return out


def _combine(field: Field, coeff_rows: List[Tuple], vecs: List[Tuple]) -> List[Tuple]:
    out = []
    for row in coeff_rows:
        acc = [field.zero()] * len(vecs[0])
        for c, v in zip(row, vecs):
            if c:
                for k, x in enumerate(v):
                    if x:
                        acc[k] = field.add(acc[k], field.mul(c, x))
        out.append(tuple(acc))
    return out


def _kernel_combos(field: Field, gram: List[List], vecs: List[Tuple]) -> List[Tuple]:
    """Restrict to the null space of the given pairing matrix."""
    m = len(vecs)
    rows = tuple(tuple(field.coerce(gram[y][x]) for x in range(m)) for y in range(m))
    null = kernel(Matrix(field, m, m, rows))
    return _combine(field, null.basis_vectors(), vecs)


def _radical_char0(a: Algebra) -> List[Tuple]:
    vecs = [tuple(a._unit_vec(i)) for i in range(a.dim)]
    gram = _trace_gram(a, vecs)
    return _kernel_combos(a.field, gram, vecs)


def _radical_charp(a: Algebra) -> Tuple[Subspace, bool]:
    """Chain of c_{p^i} trace conditions; each stage is linear on the last.

    The radical always lies inside every stage's space, so as soon as the
    current candidate is itself a nilpotent two-sided ideal it equals the
    radical and the remaining stages can be skipped.
    """
    F = a.field
    p, d = F.p, a.dim
    vecs = [tuple(a._unit_vec(i)) for i in range(d)]
    gram = _trace_gram(a, vecs)
    vecs = _kernel_combos(F, gram, vecs)
    power = p
    use_np = a._np_ok
    if use_np:
        import numpy as np
    while power <= d and vecs:
        sub = span(F, d, vecs)
        if _is_certified_radical(a, sub):
            return sub, True
        m = len(vecs)
        if use_np:
            vm = np.array([[int(c) for c in v] for v in vecs], dtype=np.int64)
            ls = np.tensordot(vm, a._np_left_stack, axes=([1], [0])) % p
            grami = [[0] * m for _ in range(m)]
            for y in range(m):
                ly = ls[y]
                prods = _numutil.mat_mul_mod(ls.reshape(m * d, d), ly, p).reshape(m, d, d)
                for x in range(m):
                    coeffs = _kernels.fp_charpoly(prods[x].tolist(), p)
                    grami[y][x] = coeffs[d - power]
        else:
            mats = [a.left_regular_coords(v) for v in vecs]
            grami = [[0] * m for _ in range(m)]
            for y in range(m):
                for x in range(m):
                    z = mats[x].matmul(mats[y])
                    coeffs = _kernels.fp_charpoly([list(r) for r in z.entries], p)
                    grami[y][x] = coeffs[d - power]
        vecs = _kernel_combos(F, grami, vecs)
        power *= p
    return span(F, d, vecs), False


def _ideal_contains_products(a: Algebra, sub: Subspace) -> bool:
    rows = sub.basis_vectors()
    if a._np_ok and rows:
        for r in rows:
            for prod in a._np_right(r).T:
                if not sub.contains(prod.tolist()):
                    return False
            for prod in a._np_left(r).T:
                if not sub.contains(prod.tolist()):
                    return False
        return True
    for i in range(a.dim):
        b = a._unit_vec(i)
        for r in rows:
            if not sub.contains(a.multiply_coords(b, r)):
                return False
            if not sub.contains(a.multiply_coords(r, b)):
                return False
    return True


def _nilpotency_chain(a: Algebra, sub: Subspace) -> Optional[List[Subspace]]:
    """J, J^2, ... down to zero, or None when powers stop shrinking."""
    rows = sub.basis_vectors()
    powers = [sub]
    cur = sub
    while cur.dim:
        nxt = _subspace_product(a, rows, cur.basis_vectors())
        if nxt.dim >= cur.dim:
            return None
        powers.append(nxt)
        cur = nxt
    return powers


def _is_certified_radical(a: Algebra, sub: Subspace) -> bool:
    """Nilpotent two-sided ideal check; caches the power chain on success."""
    if not _ideal_contains_products(a, sub):
        return False
    chain = _nilpotency_chain(a, sub)
    if chain is None:
        return False
    a._cache["rad_powers"] = chain
    return True


def _subspace_product(a: Algebra, u_rows: List[Tuple], v_rows: List[Tuple]) -> Subspace:
    acc = echelon_for(a.field, a.dim)
    if a._np_ok and u_rows and v_rows:
        import numpy as np

        p = a.field.p
        vm = np.array([[int(c) for c in v] for v in v_rows], dtype=np.int64)
        for u in u_rows:
            lu = a._np_left(u)
            prods = _numutil.mat_mul_mod(vm, lu.T, p)
            for row in prods:
                acc.insert(row.tolist())
                if acc.rank == a.dim:
                    break
    else:
        for u in u_rows:
            for v in v_rows:
                acc.insert(list(a.multiply_coords(u, v)))
    rows = tuple(tuple(a.field.coerce(x) for x in r) for r in acc.rows())
    return Subspace(a.field, a.dim, Matrix(a.field, len(rows), a.dim, rows))


def _check_radical(a: Algebra, rad: Subspace):
    if not _ideal_contains_products(a, rad):
        raise RuntimeError("radical candidate is not a two-sided ideal")
    if not _is_certified_radical(a, rad):
        raise RuntimeError("radical candidate is not nilpotent")


def radical(a: Algebra) -> Subspace:
    """Jacobson radical as a canonical subspace of the coordinate space."""
    cached = a._cache.get("radical")
    if cached is not None:
        return cached
    verified = False
    if a.provenance.kind == "quiver":
        rad = span(a.field, a.dim, a.provenance.arrow_ideal_rows or [])
    elif a.field.characteristic == 0:
        rad = span(a.field, a.dim, _radical_char0(a))
    else:
        rad, verified = _radical_charp(a)
    if not verified:
        _check_radical(a, rad)
    a._cache["radical"] = rad
    return rad


def radical_power(a: Algebra, n: int) -> Subspace:
    """J^n, computed iteratively as J·J^(n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    powers = a._cache.setdefault("rad_powers", [radical(a)])
    while len(powers) < n:
        prev = powers[-1]
        if prev.dim == 0:
            powers.append(prev)
            continue
        powers.append(_subspace_product(a, radical(a).basis_vectors(), prev.basis_vectors()))
    return powers[n - 1]


def loewy_length(a: Algebra) -> int:
    cached = a._cache.get("loewy")
    if cached is not None:
        return cached
    n = 1
    while radical_power(a, n).dim:
        n += 1
        if n > a.dim + 1:
            raise RuntimeError("radical powers failed to vanish")
    a._cache["loewy"] = n
    return n


def semisimple_quotient(a: Algebra) -> QuotientData:
    cached = a._cache.get("ss_quotient")
    if cached is None:
        cached = quotient_algebra(a, radical(a))
        a._cache["ss_quotient"] = cached
    return cached


# -- semisimple decomposition -------------------------------------------------


@dataclass
class SemisimpleDecomposition:
    """Primitive orthogonal idempotents of a semisimple algebra, grouped."""

    primitives: List[Tuple]          # coordinates in the semisimple algebra
    corner_dims: List[int]           # dim e S e for each primitive
    components: List[List[int]]      # primitive indices per Wedderburn component
    component_dims: List[int]
    central_idempotents: List[Tuple]
    split: bool


def _coprime_pieces_fp(field: Field, minpoly, rng) -> Optional[List[List]]:
    fac = factor_fp(field, minpoly, rng)
    if len(fac) < 2:
        return None
    pieces = []
    for g, e in fac.items():
        piece = [field.one()]
        for _ in range(e):
            piece = poly_mul(field, piece, list(g))
        pieces.append(piece)
    return pieces


def _coprime_pieces_q(field: Field, minpoly) -> Tuple[Optional[List[List]], bool]:
    """(pieces, certain): pieces None when no coprime split is visible."""
    roots, cofactor, decided = rational_linear_factors(minpoly)
    pieces = []
    for r, e in roots.items():
        piece = [field.one()]
        for _ in range(e):
            piece = poly_mul(field, piece, [field.neg(r), field.one()])
        pieces.append(piece)
    leftover = degree(cofactor) >= 1
    if leftover:
        pieces.append(monic(field, cofactor))
    if len(pieces) >= 2:
        return pieces, decided
    # single piece: certain only if it is a pure linear power and enumeration was complete
    certain = decided and not leftover
    return None, certain


def _poly_invmod(field: Field, f, m):
    """Inverse of f modulo m via extended Euclid."""
    r0, r1 = monic(field, list(m)), poly_mod(field, list(f), m)
    s0, s1 = [], [field.one()]
    while r1:
        q, r2 = poly_divmod(field, r0, r1)
        r0, r1 = r1, r2
        s0, s1 = s1, trim([
            field.sub(a, b)
            for a, b in itertools.zip_longest(
                s0, poly_mul(field, q, s1), fillvalue=field.zero())
        ])
    if degree(r0) != 0:
        raise ZeroDivisionError("polynomial not invertible modulo m")
    inv_lead = field.inv(r0[0])
    return [field.mul(inv_lead, c) for c in s0]


def _crt_idempotents(b: Algebra, z: Sequence, minpoly, pieces) -> List[Element]:
    field = b.field
    m = minpoly
    out = []
    ze = b.element(z)
    for h in pieces:
        mh, rem = poly_divmod(field, m, h)
        assert not rem
        inv = _poly_invmod(field, mh, h)
        g = poly_mod(field, poly_mul(field, mh, inv), m)
        e = poly_eval_element(b, g, ze)
        assert not e.is_zero()
        out.append(e)
    return out


def _splitting_candidates(b: Algebra, rng):
    d = b.dim
    for i in range(d):
        yield b._unit_vec(i)
    for i in range(d):
        for j in range(i + 1, d):
            v = list(b._unit_vec(i))
            v[j] = b.field.add(v[j], b.field.one())
            yield tuple(v)
    F = b.field
    if F.is_prime_field:
        for _ in range(RANDOM_SPLIT_TRIES_FP):
            yield tuple(rng.randrange(F.p) for _ in range(d))
    else:
        from fractions import Fraction

        for _ in range(RANDOM_SPLIT_TRIES_Q):
            yield tuple(Fraction(rng.randint(-9, 9)) for _ in range(d))


def _exhaustive_candidates(b: Algebra):
    p, d = b.field.p, b.dim
    for coords in itertools.product(range(p), repeat=d):
        if any(coords):
            yield coords


def _primitive_decomposition(b: Algebra, rng) -> List[Tuple[Tuple, int]]:
    """Primitive orthogonal idempotents of a semisimple unital algebra.

    Returns (coordinates, corner dim) pairs; corner dim 1 certifies a split
    primitive, larger corners are certified field components (possible only
    over F_p, by Wedderburn's little theorem).  Raises SplitUndecided when
    rational factorization cannot settle the structure.
    """
    if b.dim == 1:
        return [(tuple(b.unit), 1)]
    F = b.field
    tainted = False
    field_certificate = False

    def try_candidate(z):
        nonlocal tainted, field_certificate
        mp = minimal_polynomial(b, z)
        if F.is_prime_field:
            pieces = _coprime_pieces_fp(F, mp, rng)
            if pieces is None and degree(mp) == b.dim and b.is_commutative():
                fac = factor_fp(F, mp, rng)
                if len(fac) == 1 and next(iter(fac.values())) == 1:
                    field_certificate = True
            return z, mp, pieces
        pieces, certain = _coprime_pieces_q(F, mp)
        if pieces is None and not certain:
            tainted = True
        return z, mp, pieces

    for cand in _splitting_candidates(b, rng):
        z, mp, pieces = try_candidate(cand)
        if pieces:
            return _recurse_split(b, z, mp, pieces, rng)
    if F.is_prime_field and not field_certificate:
        if F.p ** b.dim <= EXHAUSTIVE_SPLIT_CAP:
            for cand in _exhaustive_candidates(b):
                z, mp, pieces = try_candidate(cand)
                if pieces:
                    return _recurse_split(b, z, mp, pieces, rng)
            # exhaustion proves there is no proper idempotent: division ring,
            # hence a finite field
            field_certificate = True
        else:
            raise SplitUndecided(
                "no splitting element found within budget and the algebra is too "
                "large to exhaust")
    if F.is_prime_field and field_certificate:
        return [(tuple(b.unit), b.dim)]
    raise SplitUndecided("minimal polynomials admit no rational linear split")


def _recurse_split(b: Algebra, z, minpoly, pieces, rng) -> List[Tuple[Tuple, int]]:
    idems = _crt_idempotents(b, z, minpoly, pieces)
    out = []
    for e in idems:
        sub, rows = corner_data(b, e)
        for coords, cdim in _primitive_decomposition(sub, rng):
            F = b.field
            acc = [F.zero()] * b.dim
            for c, row in zip(coords, rows):
                if c:
                    for k, x in enumerate(row):
                        if x:
                            acc[k] = F.add(acc[k], F.mul(c, x))
            out.append((tuple(acc), cdim))
    return out


def _peirce_rows(a: Algebra, e: Sequence, f: Sequence) -> Subspace:
    """Basis of e·A·f as a subspace of the coordinate space."""
    if a._np_ok:
        proj = _numutil.mat_mul_mod(a._np_left(e), a._np_right(f), a.field.p)
        return span(a.field, a.dim, proj.T.tolist())
    le = a.left_regular_coords(e)
    rf = a.right_regular_coords(f)
    proj = le.matmul(rf)
    return span(a.field, a.dim, proj.transpose().entries)


def peirce_component(a: Algebra, e: Element, f: Element) -> Subspace:
    return _peirce_rows(a, e.coords, f.coords)


def semisimple_decomposition(a: Algebra, seed: int = 0) -> SemisimpleDecomposition:
    """Decomposition data of A/Rad(A): primitives, components, split flag."""
    key = ("ss_decomp", seed)
    cached = a._cache.get(key)
    if cached is not None:
        return cached
    qd = semisimple_quotient(a)
    s = qd.algebra
    rng = random.Random(seed)
    prim = _primitive_decomposition(s, rng)
    primitives = [coords for coords, _ in prim]
    corner_dims = [cd for _, cd in prim]
    m = len(primitives)
    # group into components: e_i S e_j != 0 iff same Wedderburn component
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    peirce_dim: Dict[Tuple[int, int], int] = {}
    for i in range(m):
        for j in range(m):
            dim_ij = _peirce_rows(s, primitives[i], primitives[j]).dim
            peirce_dim[(i, j)] = dim_ij
            if dim_ij and find(i) != find(j):
                parent[find(i)] = find(j)
    groups: Dict[int, List[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    components = [sorted(g) for g in sorted(groups.values(), key=lambda g: min(g))]
    component_dims = []
    central = []
    F = s.field
    for comp in components:
        component_dims.append(sum(peirce_dim[(i, j)] for i in comp for j in comp))
        acc = [F.zero()] * s.dim
        for i in comp:
            for k, x in enumerate(primitives[i]):
                acc[k] = F.add(acc[k], x)
        central.append(tuple(acc))
    split = all(cd == 1 for cd in corner_dims) and all(
        component_dims[c] == len(comp) ** 2 for c, comp in enumerate(components)
    )
    result = SemisimpleDecomposition(primitives, corner_dims, components,
                                     component_dims, central, split)
    a._cache[key] = result
    return result


def wedderburn_split(a: Algebra, seed: int = 0) -> Tuple[List[Element], bool]:
    """Central primitive idempotents of A/Rad(A) and the split flag."""
    dec = semisimple_decomposition(a, seed)
    s = semisimple_quotient(a).algebra
    return [s.element(c) for c in dec.central_idempotents], dec.split


def is_split(a: Algebra, seed: int = 0) -> bool:
    return semisimple_decomposition(a, seed).split


def ell(a: Algebra, seed: int = 0) -> int:
    """Number of isomorphism classes of simple modules (Wedderburn components)."""
    return len(semisimple_decomposition(a, seed).components)


# -- idempotent lifting -------------------------------------------------------


@dataclass
class IdempotentSet:
    """Pairwise-orthogonal primitive idempotents with iso-class grouping."""

    idempotents: List[Element]
    iso_classes: List[List[int]]
    basic_representatives: List[int]
    seed: int

    def __len__(self):
        return len(self.idempotents)


def primitive_idempotents(a: Algebra, seed: int = 0) -> IdempotentSet:
    """Lift a split semisimple decomposition to primitive idempotents of A.

    Lifting iterates x -> 3x^2 - 2x^3 (the defect squares each pass, so
    nilpotency of the radical forces convergence), pushed through shrinking
    corners so the lifts stay pairwise orthogonal.
    """
    key = ("idempotents", seed)
    cached = a._cache.get(key)
    if cached is not None:
        return cached
    dec = semisimple_decomposition(a, seed)
    if not dec.split:
        raise NotSplit("primitive idempotents require a split algebra")
    qd = semisimple_quotient(a)
    ll = loewy_length(a)
    max_iter = max(ll, 1).bit_length() + 2
    lifted: List[Element] = []
    total = a.zero_element()
    unit = a.unit_element()
    for scoords in dec.primitives:
        x = a.element(qd.lift(scoords))
        shrink = unit - total
        x = shrink * x * shrink
        for _ in range(max_iter):
            if x * x == x:
                break
            sq = x * x
            x = sq.scale(3) - (sq * x).scale(2)
        else:
            raise RuntimeError("idempotent lifting did not converge")
        lifted.append(x)
        total = total + x
    if total != unit:
        raise RuntimeError("lifted idempotents do not sum to the unit")
    result = IdempotentSet(lifted, [list(c) for c in dec.components],
                           [c[0] for c in dec.components], seed)
    a._cache[key] = result
    return result


# -- Cartan data ----------------------------------------------------------------


@dataclass
class StructureReport:
    radical_dim: int
    loewy_length: int
    ell: Optional[int]
    cartan: Optional[List[List[int]]]
    ext1_diag: Optional[List[int]]
    split: Optional[bool]
    split_reason: str = ""


def cartan_matrix(a: Algebra, seed: int = 0) -> List[List[int]]:
    """C[i][j] = dim e_i A e_j over basic representatives."""
    idems = primitive_idempotents(a, seed)
    reps = [idems.idempotents[r] for r in idems.basic_representatives]
    return [[peirce_component(a, ei, ej).dim for ej in reps] for ei in reps]


def ext1_diagonal(a: Algebra, seed: int = 0) -> List[int]:
    """dim e_i (J/J^2) e_i per iso class (the Ext^1(S_i, S_i) dimensions)."""
    idems = primitive_idempotents(a, seed)
    reps = [idems.idempotents[r] for r in idems.basic_representatives]
    j1 = radical(a)
    j2 = radical_power(a, 2)
    out = []
    for e in reps:
        d1 = _peirce_section(a, e, j1)
        d2 = _peirce_section(a, e, j2)
        out.append(d1 - d2)
    return out


def _peirce_section(a: Algebra, e: Element, sub: Subspace) -> int:
    """dim of e·W·e for a subspace W."""
    rows = []
    for w in sub.basis_vectors():
        val = a.multiply_coords(a.multiply_coords(e.coords, w), e.coords)
        rows.append(val)
    return span(a.field, a.dim, rows).dim


def structure_report(a: Algebra, seed: int = 0) -> StructureReport:
    rad = radical(a)
    ll = loewy_length(a)
    try:
        dec = semisimple_decomposition(a, seed)
    except SplitUndecided as exc:
        return StructureReport(rad.dim, ll, None, None, None, None, str(exc))
    n_ell = len(dec.components)
    if not dec.split:
        return StructureReport(rad.dim, ll, n_ell, None, None, False,
                               "not split over the ground field")
    return StructureReport(rad.dim, ll, n_ell, cartan_matrix(a, seed),
                           ext1_diagonal(a, seed), True)
