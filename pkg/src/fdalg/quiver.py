"""Quiver-with-relations DSL and its compilation to a structure-constant algebra.

Grammar (sections may be separated by newlines or semicolons):

    vertices: u v
    arrows:   a: u -> v, b: v -> v
    relations: b^2, a*b - 2 b*a

Path composition is left-to-right: ``a*b`` means "a, then b".  Relation
coefficients are integers, ``n/m`` fractions, or named parameters bound at
parse time (the CLI binds them with ``--param q=...``).

Relations must combine parallel paths of a single common length >= 2; the
length-graded normal form this module uses is exact precisely for such
homogeneous ideals, and anything else is rejected up front.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebras import Algebra, Element, Provenance
from .errors import BadParameter, NotAdmissible, QuiverSyntaxError, UnsupportedRelations
from .fields import Field
from .linalg import Matrix, Subspace, echelon_for, span

DEFAULT_CAP = 32
PATH_CAP = 20000

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)"
    r"|(?P<arrowsym>->)|(?P<sym>[:;,*^+\-/])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> List[Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise QuiverSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tok = m.group()
        if kind != "ws":
            tokens.append(Token("sym" if kind == "arrowsym" else kind, tok, line, col))
        nl = tok.count("\n")
        if nl:
            line += nl
            col = len(tok) - tok.rfind("\n")
        else:
            col += len(tok)
        pos = m.end()
    return tokens


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Relation:
    """Homogeneous combination of parallel paths: [(coeff, arrow-index tuple)]."""

    terms: Tuple[Tuple[object, Tuple[int, ...]], ...]
    source: int
    target: int
    degree: int


@dataclass(frozen=True)
class QuiverPresentation:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    relations: Tuple[Relation, ...]
    field: Field


class _Parser:
    def __init__(self, tokens: List[Token], field: Field, params: Dict[str, object]):
        self.toks = tokens
        self.i = 0
        self.field = field
        self.params = {k: field.coerce(v) for k, v in (params or {}).items()}
        self.vertices: List[str] = []
        self.vindex: Dict[str, int] = {}
        self.arrows: List[Arrow] = []
        self.aindex: Dict[str, int] = {}
        self.relations: List[Relation] = []

    def peek(self) -> Optional[Token]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> Token:
        t = self.peek()
        if t is None:
            last = self.toks[-1] if self.toks else Token("", "", 1, 1)
            raise QuiverSyntaxError("unexpected end of input", last.line, last.col)
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.text != text:
            raise QuiverSyntaxError(f"expected {text!r}, found {t.text!r}", t.line, t.col)
        return t

    def at_section_start(self) -> bool:
        t = self.peek()
        if t is None or t.kind != "name" or t.text not in ("vertices", "arrows", "relations"):
            return False
        nxt = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
        return nxt is not None and nxt.text == ":"

    def parse(self) -> QuiverPresentation:
        seen = set()
        while self.peek() is not None:
            if self.peek().text == ";":
                self.next()
                continue
            if not self.at_section_start():
                t = self.peek()
                raise QuiverSyntaxError(f"expected a section keyword, found {t.text!r}", t.line, t.col)
            key = self.next().text
            self.expect(":")
            if key in seen:
                t = self.toks[self.i - 2]
                raise QuiverSyntaxError(f"duplicate section {key!r}", t.line, t.col)
            seen.add(key)
            if key == "vertices":
                self.parse_vertices()
            elif key == "arrows":
                self.parse_arrows()
            else:
                self.parse_relations()
        if not self.vertices:
            raise QuiverSyntaxError("no vertices declared", 1, 1)
        return QuiverPresentation(tuple(self.vertices), tuple(self.arrows),
                                  tuple(self.relations), self.field)

    def parse_vertices(self):
        while True:
            t = self.peek()
            if t is None or t.text == ";" or self.at_section_start():
                break
            if t.text == ",":
                self.next()
                continue
            if t.kind != "name":
                raise QuiverSyntaxError(f"bad vertex name {t.text!r}", t.line, t.col)
            self.next()
            if t.text in self.vindex:
                raise QuiverSyntaxError(f"duplicate vertex {t.text!r}", t.line, t.col)
            self.vindex[t.text] = len(self.vertices)
            self.vertices.append(t.text)

    def _vertex(self, t: Token) -> int:
        if t.text not in self.vindex:
            raise QuiverSyntaxError(f"unknown vertex {t.text!r}", t.line, t.col)
        return self.vindex[t.text]

    def parse_arrows(self):
        while True:
            t = self.peek()
            if t is None or self.at_section_start():
                break
            if t.text in (",", ";"):
                self.next()
                continue
            if t.kind != "name":
                raise QuiverSyntaxError(f"bad arrow name {t.text!r}", t.line, t.col)
            name = self.next()
            self.expect(":")
            src = self._vertex(self.next())
            self.expect("->")
            tgt = self._vertex(self.next())
            if name.text in self.aindex or name.text in self.vindex:
                raise QuiverSyntaxError(f"duplicate name {name.text!r}", name.line, name.col)
            self.aindex[name.text] = len(self.arrows)
            self.arrows.append(Arrow(name.text, src, tgt))

    # -- relation expressions ------------------------------------------

    def parse_relations(self):
        while True:
            t = self.peek()
            if t is None or self.at_section_start():
                break
            if t.text in (",", ";"):
                self.next()
                continue
            self.relations.append(self.parse_relation())

    def parse_relation(self) -> Relation:
        start = self.peek()
        terms = []
        sign = 1
        expect_term = True
        while True:
            t = self.peek()
            if t is None or t.text in (",", ";") or self.at_section_start():
                break
            if t.text in ("+", "-"):
                self.next()
                sign = -1 if t.text == "-" else 1
                expect_term = True
                continue
            if not expect_term:
                raise QuiverSyntaxError(f"expected '+', '-' or ',' before {t.text!r}", t.line, t.col)
            coeff, path = self.parse_term()
            if sign < 0:
                coeff = self.field.neg(coeff)
            terms.append((coeff, path, t))
            sign = 1
            expect_term = False
        if not terms:
            raise QuiverSyntaxError("empty relation", start.line, start.col)
        lengths = {len(p) for (_, p, _) in terms}
        for (_, p, tok) in terms:
            if len(p) < 2:
                raise QuiverSyntaxError("relation path has length < 2 (not admissible)",
                                        tok.line, tok.col)
        if len(lengths) > 1:
            raise UnsupportedRelations(
                f"relation near line {terms[0][2].line} mixes path lengths {sorted(lengths)}; "
                "only length-homogeneous relations are supported")
        srcs = {self.arrows[p[0]].source for (_, p, _) in terms}
        tgts = {self.arrows[p[-1]].target for (_, p, _) in terms}
        if len(srcs) > 1 or len(tgts) > 1:
            tok = terms[0][2]
            raise QuiverSyntaxError("relation combines non-parallel paths", tok.line, tok.col)
        return Relation(tuple((c, p) for (c, p, _) in terms),
                        srcs.pop(), tgts.pop(), lengths.pop())

    def parse_term(self):
        """One summand: optional coefficient, then a composable path."""
        t = self.peek()
        coeff = self.field.one()
        have_coeff = False
        if t.kind == "int":
            coeff = self._parse_number()
            have_coeff = True
        elif t.kind == "name" and t.text not in self.aindex:
            if t.text in self.params:
                self.next()
                coeff = self.params[t.text]
                have_coeff = True
            else:
                raise QuiverSyntaxError(f"unknown arrow or parameter {t.text!r}", t.line, t.col)
        if have_coeff and self.peek() is not None and self.peek().text == "*":
            nxt = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
            if nxt is not None and nxt.kind == "name":
                self.next()  # allow explicit 'coeff * path'
        path = self.parse_path()
        return coeff, path

    def _parse_number(self):
        t = self.next()
        num = int(t.text)
        if self.peek() is not None and self.peek().text == "/":
            self.next()
            den = self.next()
            if den.kind != "int":
                raise QuiverSyntaxError("expected denominator", den.line, den.col)
            return self.field.parse_scalar(f"{num}/{den.text}")
        return self.field.coerce(num)

    def parse_path(self) -> Tuple[int, ...]:
        atoms = [self.parse_atom()]
        while self.peek() is not None and self.peek().text == "*":
            self.next()
            atoms.append(self.parse_atom())
        path: List[int] = []
        for seg in atoms:
            path.extend(seg)
        for a, b in zip(path, path[1:]):
            if self.arrows[a].target != self.arrows[b].source:
                t = self.toks[self.i - 1]
                raise QuiverSyntaxError(
                    f"path is not composable: {self.arrows[a].name} ends at "
                    f"{self.vertices[self.arrows[a].target]} but {self.arrows[b].name} "
                    f"starts at {self.vertices[self.arrows[b].source]}", t.line, t.col)
        return tuple(path)

    def parse_atom(self) -> List[int]:
        t = self.next()
        if t.kind != "name" or t.text not in self.aindex:
            raise QuiverSyntaxError(f"unknown arrow {t.text!r}", t.line, t.col)
        idx = self.aindex[t.text]
        if self.peek() is not None and self.peek().text == "^":
            self.next()
            e = self.next()
            if e.kind != "int":
                raise QuiverSyntaxError("expected integer exponent", e.line, e.col)
            n = int(e.text)
            if n < 1:
                raise QuiverSyntaxError("exponent must be >= 1", e.line, e.col)
            if n > 1 and self.arrows[idx].source != self.arrows[idx].target:
                raise QuiverSyntaxError(f"'^' requires a loop, {t.text!r} is not one",
                                        t.line, t.col)
            return [idx] * n
        return [idx]


def parse_quiver(text: str, field: Field, params: Optional[Dict[str, object]] = None
                 ) -> QuiverPresentation:
    return _Parser(_tokenize(text), field, params or {}).parse()


# -- path enumeration and the graded normal form ------------------------------


def _extend_strata(q: QuiverPresentation, strata: List[List[Tuple[int, ...]]], upto: int):
    """Grow strata[n] (all arrow-index tuples of length n) out to length ``upto``."""
    by_source: Dict[int, List[int]] = {}
    for idx, a in enumerate(q.arrows):
        by_source.setdefault(a.source, []).append(idx)
    total = sum(len(level) for level in strata)
    while len(strata) <= upto:
        n = len(strata)
        if n == 1:
            nxt = [(i,) for i in range(len(q.arrows))]
        else:
            nxt = []
            for path in strata[n - 1]:
                tgt = q.arrows[path[-1]].target
                for a in by_source.get(tgt, []):
                    nxt.append(path + (a,))
        total += len(nxt)
        if total > PATH_CAP:
            raise NotAdmissible(f"path count exceeds {PATH_CAP}; presentation not admissible "
                                "within the cap")
        strata.append(nxt)


def _paths_by_length(q: QuiverPresentation, max_len: int) -> List[List[Tuple[int, ...]]]:
    strata: List[List[Tuple[int, ...]]] = [[()]]
    _extend_strata(q, strata, max_len)
    return strata


def _ideal_echelon(q: QuiverPresentation, strata, n: int, index_of: Dict):
    """RREF accumulator for the degree-n component of the relation ideal."""
    field = q.field
    paths_n = strata[n]
    acc = echelon_for(field, len(paths_n))
    if not paths_n:
        return acc
    zero = field.zero()
    for rel in q.relations:
        g = rel.degree
        if g > n:
            continue
        for alen in range(0, n - g + 1):
            blen = n - g - alen
            for u in strata[alen]:
                if u and q.arrows[u[-1]].target != rel.source:
                    continue
                for v in strata[blen]:
                    if v and q.arrows[v[0]].source != rel.target:
                        continue
                    vec = [zero] * len(paths_n)
                    for coeff, body in rel.terms:
                        idx = index_of[n][u + body + v]
                        vec[idx] = field.add(vec[idx], coeff)
                    acc.insert(vec)
    return acc


def _strata_index(strata) -> List[Dict[Tuple[int, ...], int]]:
    return [{path: i for i, path in enumerate(level)} for level in strata]


def admissibility_bound(q: QuiverPresentation, cap: int = DEFAULT_CAP) -> int:
    """Least N with every length-N path inside the relation ideal.

    For homogeneous relations membership is graded, so it is decided by rank
    in each length stratum; once a stratum is fully covered, so is every
    longer one.  Raises NotAdmissible if no N <= cap works.
    """
    strata: List[List[Tuple[int, ...]]] = [[()]]
    for n in range(1, cap + 1):
        _extend_strata(q, strata, n)
        paths_n = strata[n]
        if not paths_n:
            return n
        if all(rel.degree > n for rel in q.relations):
            continue
        index_of = _strata_index(strata)
        acc = _ideal_echelon(q, strata, n, index_of)
        if acc.rank == len(paths_n):
            return n
    raise NotAdmissible(f"no admissibility bound below cap {cap}")


@dataclass
class PathBasis:
    """Surviving residue paths indexed by global basis position."""

    labels: List[str]
    lengths: List[int]
    sources: List[int]
    targets: List[int]
    paths: List[Tuple[int, ...]]


@dataclass
class PathAlgebraResult:
    algebra: Algebra
    vertex_idempotents: List[Element]
    arrow_ideal: Subspace
    path_basis: PathBasis
    bound: int


def _path_label(q: QuiverPresentation, path: Tuple[int, ...], src: int) -> str:
    if not path:
        return f"e_{q.vertices[src]}"
    return "*".join(q.arrows[i].name for i in path)


def _path_src(q: QuiverPresentation, path: Tuple[int, ...], trivial_vertex: int) -> int:
    return q.arrows[path[0]].source if path else trivial_vertex


def build_path_algebra(q: QuiverPresentation, cap: int = DEFAULT_CAP) -> PathAlgebraResult:
    """Compile FQ/I into structure constants on the surviving-path basis.

    Works stratum by stratum: in each length the quotient basis is the set of
    non-pivot paths of the graded ideal component, and products reduce through
    the same echelon data.  Since the bound N certifies that length-N paths
    die in the ideal, any product of total length >= N is zero.
    """
    field = q.field
    n_bound = admissibility_bound(q, cap)
    strata = _paths_by_length(q, max(n_bound - 1, 0))
    index_of = _strata_index(strata)
    reducers = {}
    surviving: List[List[int]] = []
    for n in range(n_bound):
        if n < 2 or not q.relations:
            reducers[n] = None
            surviving.append(list(range(len(strata[n]))))
            continue
        acc = _ideal_echelon(q, strata, n, index_of)
        reducers[n] = acc
        pivs = set(acc.pivots())
        surviving.append([i for i in range(len(strata[n])) if i not in pivs])

    # global basis: trivial paths are vertices 0..nv-1, then by length
    basis_paths: List[Tuple[int, Tuple[int, ...]]] = []
    nv = len(q.vertices)
    for v in range(nv):
        basis_paths.append((v, ()))
    for n in range(1, n_bound):
        for local in surviving[n]:
            path = strata[n][local]
            basis_paths.append((q.arrows[path[0]].source, path))
    dim = len(basis_paths)
    global_index = {bp: i for i, bp in enumerate(basis_paths)}

    def class_vector(src: int, path: Tuple[int, ...]):
        """Coordinates of a path's residue class in the global basis."""
        n = len(path)
        out = [field.zero()] * dim
        if n >= n_bound:
            return out
        acc = reducers.get(n)
        if acc is None:
            out[global_index[(src, path)]] = field.one()
            return out
        paths_n = strata[n]
        vec = [field.zero()] * len(paths_n)
        vec[index_of[n][path]] = field.one()
        red = acc.reduce(vec)
        for local, c in enumerate(red):
            if c:
                p2 = paths_n[local]
                out[global_index[(q.arrows[p2[0]].source, p2)]] = field.coerce(c)
        return out

    z = field.zero()
    mul = [[None] * dim for _ in range(dim)]
    for a, (asrc, apath) in enumerate(basis_paths):
        a_tgt = q.arrows[apath[-1]].target if apath else asrc
        for b, (bsrc, bpath) in enumerate(basis_paths):
            if a_tgt != bsrc:
                mul[a][b] = [z] * dim
            else:
                mul[a][b] = class_vector(asrc, apath + bpath)

    unit = [z] * dim
    for v in range(nv):
        unit[v] = field.one()

    vert_rows = []
    for v in range(nv):
        row = [z] * dim
        row[v] = field.one()
        vert_rows.append(tuple(row))
    arrow_rows = []
    for i in range(nv, dim):
        row = [z] * dim
        row[i] = field.one()
        arrow_rows.append(tuple(row))
    prov = Provenance("quiver", vertex_idempotents=tuple(vert_rows),
                      arrow_ideal_rows=tuple(arrow_rows))
    alg = Algebra(field, mul, unit, prov)
    pb = PathBasis(
        labels=[_path_label(q, p, s) for (s, p) in basis_paths],
        lengths=[len(p) for (_, p) in basis_paths],
        sources=[s for (s, _) in basis_paths],
        targets=[q.arrows[p[-1]].target if p else s for (s, p) in basis_paths],
        paths=[p for (_, p) in basis_paths],
    )
    ideal = span(field, dim, arrow_rows) if arrow_rows else span(field, dim, [])
    return PathAlgebraResult(alg, [alg.element(r) for r in vert_rows], ideal, pb, n_bound)
