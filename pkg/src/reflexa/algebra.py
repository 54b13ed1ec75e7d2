"""Finite-dimensional algebras: bound quiver algebras with monomial
relations, explicit multiplication tables, opposites, radicals.

Multiplication conventions.  An algebra is just its structure-constant
table; the two constructors orient their tables so that the module
dictionary comes out right:

* ``bound_quiver_algebra``: the product ``p * q`` of basis paths is
  "traverse q, then traverse p".  With this orientation a *left* module
  is a representation of the quiver itself (the matrix of an arrow
  ``i -> j`` has shape ``d_i x d_j`` and acts on row vectors), and a
  right module is a representation of the reversed quiver.

* ``end_algebra`` (in the morita module): the product of two
  endomorphisms is "apply the first, then the second", which makes
  ``Hom(M, -)`` a left module over the endomorphism algebra and gives
  ``End(regular) = algebra`` on the nose.

Throughout, an element x with ``e_a * x * e_b = x`` acts on a left
module from block b to block a, and on a right module from block a to
block b.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadIdempotentsError,
    BadUnitError,
    InfiniteDimensionalError,
    NonAssociativeError,
    NotBasicError,
)
from .fields import FieldSpec
from .linalg import Matrix, row_space, row_space_contains, solve_left

MAX_QUIVER_DIM = 4096


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        for a in self.arrows:
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise ValueError(f"arrow {a.name} has out-of-range endpoints")

    @staticmethod
    def make(vertex_count: int, arrows) -> "Quiver":
        return Quiver(vertex_count, tuple(Arrow(n, s, t) for (n, s, t) in arrows))

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)

    def reversed(self) -> "Quiver":
        return Quiver(
            self.vertex_count,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
        )


@dataclass(frozen=True)
class Presentation:
    """Bound-quiver data: which path each basis element is."""

    quiver: Quiver
    relations: tuple  # tuples of arrow indices, traversal order
    paths: tuple  # per basis element: (source, target, traversal tuple of arrow indices)


@dataclass(frozen=True)
class Generator:
    """A radical generator g with e_target * g * e_source = g.

    On a left module it acts from block ``source`` to block ``target``
    (matrix of shape d_source x d_target on row vectors).
    """

    label: str
    source: int
    target: int
    element: tuple  # coefficient vector in the algebra basis


class FiniteDimAlgebra:
    """Basis-indexed multiplication structure over an exact field.

    ``mult_table[i][j]`` holds the coefficient vector of ``b_i * b_j``.
    A complete set of orthogonal idempotents summing to the unit is part
    of the data; all structural invariants are checked at construction.
    """

    def __init__(
        self,
        field: FieldSpec,
        basis_labels,
        mult_table,
        unit,
        idempotents,
        presentation: Presentation | None = None,
        name: str = "",
        _checked: bool = False,
    ):
        self.field = field
        self.basis_labels = tuple(basis_labels)
        self.dim = len(self.basis_labels)
        self.mult_table = tuple(
            tuple(tuple(field.canon(c) for c in cell) for cell in row) for row in mult_table
        )
        self.unit = tuple(field.canon(c) for c in unit)
        self.idempotents = tuple(tuple(field.canon(c) for c in e) for e in idempotents)
        self.presentation = presentation
        self.name = name
        self._left_mult = None
        self._right_mult = None
        self._radical_rows = None
        self._generators = None
        self._expressions = None
        self._basic_checked = False
        self._opposite = None
        if not _checked:
            self._validate()

    # -- element arithmetic -------------------------------------------------

    def zero_vec(self):
        return (self.field.zero(),) * self.dim

    def elem_mul(self, x, y):
        """Product of two coefficient vectors."""
        f = self.field
        out = [f.zero()] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.mult_table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cell = row[j]
                c = f.mul(xi, yj)
                for k, t in enumerate(cell):
                    if t:
                        out[k] = f.add(out[k], f.mul(c, t))
        return tuple(out)

    def basis_vec(self, i):
        f = self.field
        return tuple(f.one() if k == i else f.zero() for k in range(self.dim))

    def left_mult_matrix(self, i) -> Matrix:
        """Matrix of x -> b_i * x on row coordinate vectors."""
        if self._left_mult is None:
            self._left_mult = tuple(
                Matrix(self.field, tuple(self.mult_table[k][r] for r in range(self.dim)), _canon=False)
                for k in range(self.dim)
            )
        return self._left_mult[i]

    def right_mult_matrix(self, i) -> Matrix:
        """Matrix of x -> x * b_i on row coordinate vectors."""
        if self._right_mult is None:
            self._right_mult = tuple(
                Matrix(self.field, tuple(self.mult_table[r][k] for r in range(self.dim)), _canon=False)
                for k in range(self.dim)
            )
        return self._right_mult[i]

    def left_mult_of(self, vec) -> Matrix:
        m = Matrix.zero(self.field, self.dim, self.dim)
        for i, c in enumerate(vec):
            if c:
                m = m + self.left_mult_matrix(i).scale(c)
        return m

    def right_mult_of(self, vec) -> Matrix:
        m = Matrix.zero(self.field, self.dim, self.dim)
        for i, c in enumerate(vec):
            if c:
                m = m + self.right_mult_matrix(i).scale(c)
        return m

    # -- validation ----------------------------------------------------------

    def _validate(self):
        f = self.field
        n = self.dim
        if len(self.mult_table) != n or any(len(r) != n for r in self.mult_table):
            raise ValueError("mult_table shape mismatch")
        for row in self.mult_table:
            for cell in row:
                if len(cell) != n:
                    raise ValueError("mult_table cell length mismatch")
        if len(self.unit) != n:
            raise ValueError("unit length mismatch")
        # associativity via left-multiplication operators:
        # L(b_i * b_j) must equal "apply L_j, then L_i" on row vectors
        for i in range(n):
            li = self.left_mult_matrix(i)
            for j in range(n):
                lj = self.left_mult_matrix(j)
                if self.left_mult_of(self.mult_table[i][j]) != lj @ li:
                    raise NonAssociativeError(i, j, self._assoc_witness(i, j))
        ident = Matrix.identity(f, n)
        if self.left_mult_of(self.unit) != ident:
            raise BadUnitError("left", self._unit_witness(left=True))
        if self.right_mult_of(self.unit) != ident:
            raise BadUnitError("right", self._unit_witness(left=False))
        if not self.idempotents:
            raise BadIdempotentsError("empty idempotent set")
        for a, e in enumerate(self.idempotents):
            if len(e) != n:
                raise BadIdempotentsError("idempotent length mismatch", a)
            if self.elem_mul(e, e) != e:
                raise BadIdempotentsError(f"e_{a}^2 != e_{a}", a)
        for a in range(len(self.idempotents)):
            for b in range(len(self.idempotents)):
                if a != b:
                    prod = self.elem_mul(self.idempotents[a], self.idempotents[b])
                    if any(prod):
                        raise BadIdempotentsError(f"e_{a} e_{b} != 0", (a, b))
        total = [f.zero()] * n
        for e in self.idempotents:
            total = [f.add(x, y) for x, y in zip(total, e)]
        if tuple(total) != self.unit:
            raise BadIdempotentsError("idempotents do not sum to the unit")

    def _assoc_witness(self, i, j):
        for k in range(self.dim):
            lhs = self.elem_mul(self.mult_table[i][j], self.basis_vec(k))
            rhs = self.elem_mul(self.basis_vec(i), self.mult_table[j][k])
            if lhs != rhs:
                return k
        return 0

    def _unit_witness(self, left):
        for k in range(self.dim):
            b = self.basis_vec(k)
            prod = self.elem_mul(self.unit, b) if left else self.elem_mul(b, self.unit)
            if prod != b:
                return k
        return 0

    # -- structure -----------------------------------------------------------

    @property
    def n_idempotents(self):
        return len(self.idempotents)

    def opposite(self) -> "FiniteDimAlgebra":
        """Same basis, transposed table; arrows reversed in the presentation."""
        if self._opposite is not None:
            return self._opposite
        n = self.dim
        table = tuple(tuple(self.mult_table[j][i] for j in range(n)) for i in range(n))
        pres = None
        if self.presentation is not None:
            q = self.presentation.quiver.reversed()
            rels = tuple(tuple(reversed(r)) for r in self.presentation.relations)
            paths = tuple(
                (tgt, src, tuple(reversed(trav)))
                for (src, tgt, trav) in self.presentation.paths
            )
            pres = Presentation(q, rels, paths)
        opp = FiniteDimAlgebra(
            self.field,
            self.basis_labels,
            table,
            self.unit,
            self.idempotents,
            presentation=pres,
            name=f"{self.name}^op" if self.name else "",
            _checked=True,
        )
        opp._opposite = self
        self._opposite = opp
        return opp

    # -- radical and basicness ------------------------------------------------

    def radical_rows(self) -> Matrix:
        """Canonical basis (RREF rows) of the Jacobson radical.

        For bound quiver algebras this is the span of the nontrivial
        paths.  For table algebras the computation doubles as the
        basic-as-presented check and raises NotBasicError when the
        presented idempotents are not primitive with split 1-dim corners.
        """
        if self._radical_rows is not None:
            return self._radical_rows
        f = self.field
        if self.presentation is not None:
            rows = [
                self.basis_vec(i)
                for i, (_, _, trav) in enumerate(self.presentation.paths)
                if trav
            ]
            rad = row_space(Matrix(f, rows, cols=self.dim, _canon=False)) if rows else Matrix.zero(f, 0, self.dim)
        else:
            rad = self._radical_of_table()
        self._radical_rows = rad
        self._basic_checked = True
        return rad

    def _corner_rows(self, a, b) -> Matrix:
        """Canonical spanning rows of e_a * algebra * e_b."""
        ea, eb = self.idempotents[a], self.idempotents[b]
        rows = [self.elem_mul(self.elem_mul(ea, self.basis_vec(r)), eb) for r in range(self.dim)]
        return row_space(Matrix(self.field, rows, cols=self.dim, _canon=False))

    def _unique_eigenvalue(self, vec):
        """lambda such that vec = lambda * e + nilpotent, via the minimal polynomial.

        Returns None when the minimal polynomial is not t^a (t-lambda)^b,
        i.e. when the corner is not split local.
        """
        f = self.field
        mu = _min_poly(self.left_mult_of(vec), f)
        # strip the t^a factor
        a = 0
        while a < len(mu) - 1 and mu[a] == f.zero():
            a += 1
        nu = mu[a:]  # monic, coefficients low-to-high
        b = len(nu) - 1
        if b == 0:
            return f.zero()
        if f.is_prime_field:
            p = f.p
            s, u = 0, b
            while u % p == 0:
                u //= p
                s += 1
            q = p**s
            c = nu[q * (u - 1)]
            lam = f.neg(f.div(c, f.canon(u)))
        else:
            lam = f.neg(f.div(nu[b - 1], f.canon(b)))
        # verify nu == (t - lam)^b exactly
        pow_cf = [f.one()]
        for _ in range(b):
            nxt = [f.zero()] * (len(pow_cf) + 1)
            for i, c in enumerate(pow_cf):
                nxt[i] = f.sub(nxt[i], f.mul(lam, c))
                nxt[i + 1] = f.add(nxt[i + 1], c)
            pow_cf = nxt
        if tuple(pow_cf) != tuple(nu):
            return None
        return lam

    def _radical_of_table(self) -> Matrix:
        f = self.field
        m = self.n_idempotents
        cand_rows = []
        for a in range(m):
            for b in range(m):
                corner = self._corner_rows(a, b)
                if a != b:
                    cand_rows.extend(corner.entries)
                    continue
                for g in corner.entries:
                    lam = self._unique_eigenvalue(g)
                    if lam is None:
                        raise NotBasicError(
                            f"corner e_{a} A e_{a} is not split local "
                            f"(element with non-linear-power minimal polynomial)"
                        )
                    row = tuple(
                        f.sub(x, f.mul(lam, e)) for x, e in zip(g, self.idempotents[a])
                    )
                    if any(row):
                        cand_rows.append(row)
        rad = (
            row_space(Matrix(f, cand_rows, cols=self.dim, _canon=False))
            if cand_rows
            else Matrix.zero(f, 0, self.dim)
        )
        if rad.rows != self.dim - m:
            raise NotBasicError(
                f"radical candidate has dimension {rad.rows}, expected {self.dim - m}; "
                "the presented idempotent set is not primitive-and-complete"
            )
        # two-sided ideal
        for r in range(self.dim):
            for rho in rad.entries:
                for prod in (self.elem_mul(self.basis_vec(r), rho), self.elem_mul(rho, self.basis_vec(r))):
                    if not row_space_contains(rad, Matrix(f, [prod], _canon=False)):
                        raise NotBasicError("radical candidate is not an ideal")
        # nilpotent
        cur = rad
        for _ in range(self.dim + 1):
            if cur.rows == 0:
                break
            prods = [self.elem_mul(x, y) for x in cur.entries for y in rad.entries]
            nxt = row_space(Matrix(f, prods, cols=self.dim, _canon=False))
            if nxt.rows >= cur.rows:
                raise NotBasicError("radical candidate is not nilpotent")
            cur = nxt
        else:
            raise NotBasicError("radical candidate is not nilpotent")
        return rad

    def is_basic(self) -> bool:
        try:
            self.radical_rows()
            return True
        except NotBasicError:
            return False

    def ensure_basic(self):
        self.radical_rows()

    def block_of_basis(self, i):
        """(a, b) with e_a * b_i * e_b = b_i, or None if not block-homogeneous."""
        v = self.basis_vec(i)
        for a in range(self.n_idempotents):
            for b in range(self.n_idempotents):
                if self.elem_mul(self.elem_mul(self.idempotents[a], v), self.idempotents[b]) == v:
                    return (a, b)
        return None

    # -- generators of the radical (Gabriel arrows) ---------------------------

    def generators(self) -> tuple:
        """Block-homogeneous elements lifting a basis of rad/rad^2.

        Together with the idempotents these generate the algebra; every
        basis element is a linear combination of idempotents and words
        in them (see expressions()).
        """
        if self._generators is not None:
            return self._generators
        f = self.field
        if self.presentation is not None:
            gens = []
            for ai, arr in enumerate(self.presentation.quiver.arrows):
                idx = self._path_basis_index((arr.source, arr.target, (ai,)))
                gens.append(
                    Generator(arr.name, arr.source, arr.target, self.basis_vec(idx))
                )
            self._generators = tuple(gens)
            return self._generators
        rad = self.radical_rows()
        prods = [self.elem_mul(x, y) for x in rad.entries for y in rad.entries]
        rad2 = (
            row_space(Matrix(f, prods, cols=self.dim, _canon=False))
            if prods
            else Matrix.zero(f, 0, self.dim)
        )
        # block components of radical rows, greedily extending rad^2 to rad
        comps = []
        for row in rad.entries:
            v = tuple(row)
            for a in range(self.n_idempotents):
                va = self.elem_mul(self.idempotents[a], v)
                for b in range(self.n_idempotents):
                    vab = self.elem_mul(va, self.idempotents[b])
                    if any(vab):
                        comps.append((a, b, vab))
        comps.sort(key=lambda t: (t[0], t[1], tuple(map(str, t[2]))))
        gens = []
        span = rad2
        for a, b, vab in comps:
            if span.rows == rad.rows:
                break
            cand = Matrix(f, [vab], _canon=False)
            if not row_space_contains(span, cand):
                # left module action runs source -> target: x in e_a A e_b
                # acts block b -> block a
                gens.append(Generator(f"g{len(gens)}", b, a, vab))
                span = row_space(span.vstack(cand))
        if span.rows != rad.rows:
            raise NotBasicError("radical generators do not span rad/rad^2")
        self._generators = tuple(gens)
        return self._generators

    def _path_basis_index(self, path):
        for i, p in enumerate(self.presentation.paths):
            if p == path:
                return i
        raise KeyError(path)

    def expressions(self):
        """Per basis element: (idempotent coefficients, ((word, coeff), ...)).

        A word is a tuple of generator indices in traversal order; the
        element of a word (g1, ..., gk) is "apply g1, then g2, ...".
        Used to rebuild the action of every basis element from generator
        actions when constructing or enumerating modules.
        """
        if self._expressions is not None:
            return self._expressions
        f = self.field
        gens = self.generators()
        if self.presentation is not None:
            exprs = []
            for i, (src, tgt, trav) in enumerate(self.presentation.paths):
                if not trav:
                    idem = tuple(
                        f.one() if v == src else f.zero()
                        for v in range(self.n_idempotents)
                    )
                    exprs.append((idem, ()))
                else:
                    zero_idem = (f.zero(),) * self.n_idempotents
                    exprs.append((zero_idem, ((tuple(trav), f.one()),)))
            self._expressions = tuple(exprs)
            return self._expressions
        rad = self.radical_rows()
        # BFS words in the generators until they span the radical
        words = []  # (word, element)
        frontier = [((gi,), g.element) for gi, g in enumerate(gens)]
        span = Matrix.zero(f, 0, self.dim)
        while frontier:
            new_frontier = []
            for word, elem in frontier:
                if not any(elem):
                    continue
                cand = Matrix(f, [elem], _canon=False)
                if row_space_contains(span, cand):
                    continue
                words.append((word, elem))
                span = row_space(span.vstack(cand))
                for gi, g in enumerate(gens):
                    if g.source == gens[word[-1]].target:
                        # "word, then g" as an element is g.element * elem
                        new_frontier.append((word + (gi,), self.elem_mul(g.element, elem)))
            frontier = new_frontier
            if span.rows == rad.rows:
                break
        if span.rows != rad.rows:
            raise NotBasicError("generator words do not span the radical")
        basis_rows = Matrix(
            f,
            list(self.idempotents) + [elem for _, elem in words],
            cols=self.dim,
            _canon=False,
        )
        exprs = []
        for i in range(self.dim):
            target = Matrix(f, [self.basis_vec(i)], _canon=False)
            coeffs = solve_left(basis_rows, target)
            if coeffs is None:
                raise NotBasicError("basis element outside idempotent+word span")
            cv = coeffs.entries[0]
            idem = tuple(cv[: self.n_idempotents])
            word_terms = tuple(
                (words[t][0], cv[self.n_idempotents + t])
                for t in range(len(words))
                if cv[self.n_idempotents + t]
            )
            exprs.append((idem, word_terms))
        self._expressions = tuple(exprs)
        return self._expressions

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return f"FiniteDimAlgebra({self.field}, dim={self.dim}{nm})"


def _min_poly(mat: Matrix, field: FieldSpec):
    """Monic minimal polynomial of a square matrix, coefficients low-to-high."""
    n = mat.rows
    flat = [Matrix.identity(field, n).flatten()]
    power = Matrix.identity(field, n)
    while True:
        power = power @ mat
        stack = Matrix(field, flat, cols=n * n, _canon=False)
        target = Matrix(field, [power.flatten()], cols=n * n, _canon=False)
        sol = solve_left(stack, target)
        if sol is not None:
            coeffs = [field.neg(c) for c in sol.entries[0]] + [field.one()]
            return tuple(coeffs)
        flat.append(power.flatten())


def from_table(field, labels, table, unit, idempotents, name="") -> FiniteDimAlgebra:
    """Build and fully validate an algebra from structure constants."""
    return FiniteDimAlgebra(field, labels, table, unit, idempotents, name=name)


def bound_quiver_algebra(field, quiver: Quiver, relations, name="", max_dim=MAX_QUIVER_DIM) -> FiniteDimAlgebra:
    """Monomial bound quiver algebra: basis = paths avoiding the relations.

    ``relations`` are composable arrow-name paths of length >= 2; the
    product of two basis paths is their concatenation ("first the right
    factor, then the left"), zero when a relation appears as a subpath.
    """
    rel_idx = []
    for rel in relations:
        if len(rel) < 2:
            raise ValueError(f"relations must have length >= 2: {list(rel)}")
        idx = tuple(quiver.arrow_index(nm) for nm in rel)
        for x, y in zip(idx, idx[1:]):
            if quiver.arrows[x].target != quiver.arrows[y].source:
                raise ValueError(f"relation path is not composable: {list(rel)}")
        rel_idx.append(idx)
    rel_idx = tuple(sorted(set(rel_idx)))

    def violates(trav):
        for r in rel_idx:
            lr = len(r)
            if lr <= len(trav) and trav[-lr:] == r:
                return True
        return False

    # proper prefixes of relations; the pair (vertex, longest such suffix)
    # determines which extensions survive, so a reachable cycle in this
    # finite state graph is exactly an unavoidable surviving cycle
    prefixes = {()}
    for r in rel_idx:
        for k in range(1, len(r)):
            prefixes.add(r[:k])

    def state_suffix(trav):
        for k in range(len(trav), 0, -1):
            suf = trav[len(trav) - k :]
            if suf in prefixes:
                return suf
        return ()

    start_states = set()
    edges = {}
    todo = [(v, ()) for v in range(quiver.vertex_count)]
    seen = set(todo)
    start_states.update(todo)
    while todo:
        v, suf = todo.pop()
        outs = []
        for ai, a in enumerate(quiver.arrows):
            if a.source != v:
                continue
            t2 = suf + (ai,)
            if violates(t2):
                continue
            ns = (a.target, state_suffix(t2))
            outs.append((ai, ns))
            if ns not in seen:
                seen.add(ns)
                todo.append(ns)
        edges[(v, suf)] = outs
    # cycle detection over the reachable state graph
    color = {s: 0 for s in seen}

    def find_cycle(s, trail):
        color[s] = 1
        for ai, ns in edges.get(s, ()):
            if color[ns] == 1:
                return trail + (ai,)
            if color[ns] == 0:
                res = find_cycle(ns, trail + (ai,))
                if res is not None:
                    return res
        color[s] = 2
        return None

    for s in sorted(seen):
        if color[s] == 0:
            cyc = find_cycle(s, ())
            if cyc is not None:
                raise InfiniteDimensionalError(tuple(quiver.arrows[i].name for i in cyc))

    # breadth-first enumeration of the (finite) surviving path set
    paths = [(v, v, ()) for v in range(quiver.vertex_count)]
    frontier = []
    for ai, a in enumerate(quiver.arrows):
        if not violates((ai,)):
            frontier.append((a.source, a.target, (ai,)))
    frontier.sort(key=lambda p: p[2])
    while frontier:
        paths.extend(frontier)
        if len(paths) > max_dim:
            raise ValueError(f"path basis exceeds max_dim={max_dim}")
        new = []
        for src, tgt, trav in frontier:
            for ai, a in enumerate(quiver.arrows):
                if a.source == tgt:
                    t2 = trav + (ai,)
                    if not violates(t2):
                        new.append((src, a.target, t2))
        new.sort(key=lambda p: p[2])
        frontier = new

    index = {p: i for i, p in enumerate(paths)}
    f = field
    n = len(paths)
    zero = (f.zero(),) * n

    def vec(i):
        return tuple(f.one() if k == i else f.zero() for k in range(n))

    table = []
    for pi, (psrc, ptgt, ptrav) in enumerate(paths):
        row = []
        for qi, (qsrc, qtgt, qtrav) in enumerate(paths):
            # p * q = "traverse q, then p": composable iff target(q) = source(p)
            if qtgt != psrc:
                row.append(zero)
                continue
            trav = qtrav + ptrav
            key = (qsrc, ptgt, trav)
            if any(
                trav[s : s + len(r)] == r
                for r in rel_idx
                for s in range(len(trav) - len(r) + 1)
            ):
                row.append(zero)
            else:
                row.append(vec(index[key]))
        table.append(tuple(row))

    labels = [
        f"e{src}" if not trav else "*".join(quiver.arrows[i].name for i in trav)
        for (src, tgt, trav) in paths
    ]
    unit = [f.zero()] * n
    idems = []
    for v in range(quiver.vertex_count):
        e = list(zero)
        e[index[(v, v, ())]] = f.one()
        idems.append(tuple(e))
        unit = [f.add(a, b) for a, b in zip(unit, e)]
    pres = Presentation(quiver, rel_idx, tuple(paths))
    return FiniteDimAlgebra(
        f, labels, tuple(table), tuple(unit), tuple(idems), presentation=pres, name=name
    )
