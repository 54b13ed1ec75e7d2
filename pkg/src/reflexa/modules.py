"""Finitely generated modules over a FiniteDimAlgebra.

A Module stores, for every algebra basis element, the matrix of its
action on row vectors (the action of the module's own side).  Module
coordinates are always block-adapted: the idempotents act as the
canonical coordinate projectors, so the vertex components are the
coordinate blocks.  With that normalization a module map is a block
diagonal matrix and every construction below (kernels, quotients,
covers, duals) stays canonical and bit-reproducible.
"""

from __future__ import annotations

import itertools

from .algebra import FiniteDimAlgebra, Generator
from .errors import (
    BudgetExceededError,
    NotBasicError,
    SideMismatchError,
    UndecidedError,
)
from .linalg import (
    Matrix,
    invert,
    kernel_basis,
    rank,
    row_space,
    row_space_contains,
    rref,
    solve_left,
)

LEFT = "left"
RIGHT = "right"


def _block_offsets(dims):
    offs = [0]
    for d in dims:
        offs.append(offs[-1] + d)
    return offs


class Module:
    """A left or right module in block-adapted row coordinates."""

    def __init__(self, algebra: FiniteDimAlgebra, side: str, dims, act, check=True):
        if side not in (LEFT, RIGHT):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        self.algebra = algebra
        self.side = side
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n_idempotents:
            raise ValueError("dims length must match the idempotent count")
        self.total_dim = sum(self.dims)
        self.offsets = _block_offsets(self.dims)
        self.act = tuple(act)
        if len(self.act) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis element")
        self._projectors = None
        self._act_memo = {}
        if check:
            self._validate()

    # -- basic structure ----------------------------------------------------

    def projector(self, i) -> Matrix:
        if self._projectors is None:
            f = self.algebra.field
            d = self.total_dim
            projs = []
            for k in range(len(self.dims)):
                m = [[f.zero()] * d for _ in range(d)]
                for r in range(self.offsets[k], self.offsets[k + 1]):
                    m[r][r] = f.one()
                projs.append(Matrix(f, m, cols=d, _canon=False))
            self._projectors = tuple(projs)
        return self._projectors[i]

    def act_of_vec(self, vec) -> Matrix:
        key = tuple(vec)
        got = self._act_memo.get(key)
        if got is not None:
            return got
        f = self.algebra.field
        out = Matrix.zero(f, self.total_dim, self.total_dim)
        for i, c in enumerate(vec):
            if c:
                out = out + self.act[i].scale(c)
        self._act_memo[key] = out
        return out

    def _validate(self):
        a = self.algebra
        f = a.field
        d = self.total_dim
        for m in self.act:
            if m.rows != d or m.cols != d:
                raise ValueError("action matrix shape mismatch")
        if self.act_of_vec(a.unit) != Matrix.identity(f, d):
            raise ValueError("unit does not act as the identity")
        for i in range(a.n_idempotents):
            if self.act_of_vec(a.idempotents[i]) != self.projector(i):
                raise ValueError(
                    f"idempotent {i} does not act as the canonical block projector"
                )
        tbl = a.mult_table
        for i in range(a.dim):
            ai = self.act[i]
            for j in range(a.dim):
                prod = ai @ self.act[j]
                # left action composes through the opposite product
                target = tbl[j][i] if self.side == LEFT else tbl[i][j]
                if prod != self.act_of_vec(target):
                    raise ValueError(
                        f"action does not respect the multiplication table at basis pair ({i}, {j})"
                    )

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __eq__(self, other):
        return (
            isinstance(other, Module)
            and self.algebra is other.algebra
            and self.side == other.side
            and self.dims == other.dims
            and self.act == other.act
        )

    def __hash__(self):
        return hash((id(self.algebra), self.side, self.dims, self.act))

    def __repr__(self):
        return f"Module({self.side}, dims={self.dims})"

    def signature(self):
        """Deterministic structural key (used for canonical ordering)."""
        return (
            self.side,
            self.dims,
            tuple(tuple(map(str, m.flatten())) for m in self.act),
        )


class ModuleMap:
    """A homomorphism of modules, stored as its full matrix on row vectors."""

    def __init__(self, source: Module, target: Module, matrix: Matrix, check=True):
        self.source = source
        self.target = target
        self.matrix = matrix
        if matrix.rows != source.total_dim or matrix.cols != target.total_dim:
            raise ValueError("map matrix shape mismatch")
        if check:
            self._validate()

    def _validate(self):
        if self.source.algebra is not self.target.algebra:
            raise ValueError("map between modules over different algebras")
        if self.source.side != self.target.side:
            raise SideMismatchError("map between modules of different sides")
        for i in range(self.source.algebra.dim):
            if self.source.act[i] @ self.matrix != self.matrix @ self.target.act[i]:
                raise ValueError(f"matrix does not intertwine basis element {i}")

    def block(self, i) -> Matrix:
        rs = range(self.source.offsets[i], self.source.offsets[i + 1])
        cs = range(self.target.offsets[i], self.target.offsets[i + 1])
        return self.matrix.submatrix(rs, cs)

    def then(self, other: "ModuleMap") -> "ModuleMap":
        assert self.target is other.source or self.target == other.source
        return ModuleMap(self.source, other.target, self.matrix @ other.matrix, check=False)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_mono(self) -> bool:
        return rank(self.matrix) == self.source.total_dim

    def is_epi(self) -> bool:
        return rank(self.matrix) == self.target.total_dim

    def is_iso(self) -> bool:
        return (
            self.source.total_dim == self.target.total_dim
            and rank(self.matrix) == self.source.total_dim
        )

    def __eq__(self, other):
        return (
            isinstance(other, ModuleMap)
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __repr__(self):
        return f"ModuleMap({self.source.total_dim} -> {self.target.total_dim})"


def identity_map(m: Module) -> ModuleMap:
    return ModuleMap(m, m, Matrix.identity(m.algebra.field, m.total_dim), check=False)


def zero_map(m: Module, n: Module) -> ModuleMap:
    return ModuleMap(m, n, Matrix.zero(m.algebra.field, m.total_dim, n.total_dim), check=False)


def zero_module(a: FiniteDimAlgebra, side: str) -> Module:
    z = Matrix.zero(a.field, 0, 0)
    return Module(a, side, (0,) * a.n_idempotents, (z,) * a.dim, check=False)


# -- construction from raw data ------------------------------------------------


def module_from_raw(a: FiniteDimAlgebra, side: str, act, check=True):
    """Build a module from action matrices in arbitrary coordinates.

    The idempotents must act as commuting idempotent matrices summing to
    the identity; coordinates are changed so they become the canonical
    block projectors.  Returns (module, basis) where the rows of
    ``basis`` express the new coordinates in the old ones.
    """
    f = a.field
    d = act[0].rows if act else 0
    blocks = []
    dims = []
    for i in range(a.n_idempotents):
        e_mat = Matrix.zero(f, d, d)
        for k, c in enumerate(a.idempotents[i]):
            if c:
                e_mat = e_mat + act[k].scale(c)
        b = row_space(e_mat)
        blocks.append(b)
        dims.append(b.rows)
    basis = blocks[0]
    for b in blocks[1:]:
        basis = basis.vstack(b)
    if basis.rows != d:
        raise ValueError("idempotent images do not decompose the space")
    new_act = []
    for k in range(a.dim):
        na = solve_left(basis, basis @ act[k])
        if na is None:
            raise ValueError("action does not stabilize the idempotent decomposition")
        new_act.append(na)
    return Module(a, side, dims, new_act, check=check), basis


def _word_matrix(a, side, dims, gen_list, gen_mats, word):
    f = a.field
    offs = _block_offsets(dims)
    d = sum(dims)

    def emb(gi):
        g = gen_list[gi]
        mat = gen_mats[gi]
        src, tgt = (g.source, g.target) if side == LEFT else (g.target, g.source)
        out = [[f.zero()] * d for _ in range(d)]
        for r in range(mat.rows):
            for c in range(mat.cols):
                out[offs[src] + r][offs[tgt] + c] = mat[r, c]
        return Matrix(f, out, cols=d, _canon=False)

    seq = word if side == LEFT else tuple(reversed(word))
    m = emb(seq[0])
    for gi in seq[1:]:
        m = m @ emb(gi)
    return m


def module_from_generators(a: FiniteDimAlgebra, side: str, dims, gen_mats, check=True):
    """Build a module from one matrix per radical generator.

    For a left module the matrix of generator g has shape
    (dims[g.source], dims[g.target]); for a right module the shape is
    transposed.  Raises ValueError when the assignment does not satisfy
    the algebra's relations.
    """
    f = a.field
    gens = a.generators()
    exprs = a.expressions()
    d = sum(dims)
    offs = _block_offsets(dims)
    act = []
    for bi in range(a.dim):
        idem_coeffs, word_terms = exprs[bi]
        m = Matrix.zero(f, d, d)
        for v, c in enumerate(idem_coeffs):
            if c:
                proj = [[f.zero()] * d for _ in range(d)]
                for r in range(offs[v], offs[v + 1]):
                    proj[r][r] = c
                m = m + Matrix(f, proj, cols=d, _canon=False)
        for word, c in word_terms:
            m = m + _word_matrix(a, side, dims, gens, gen_mats, word).scale(c)
        act.append(m)
    return Module(a, side, dims, act, check=check)


def module_from_arrows(a: FiniteDimAlgebra, side: str, dims, arrow_mats: dict, check=True):
    """Build a module of a bound quiver algebra from per-arrow matrices."""
    if a.presentation is None:
        raise ValueError("algebra has no quiver presentation")
    gens = a.generators()
    mats = []
    f = a.field
    for g in gens:
        mat = arrow_mats.get(g.label)
        src, tgt = (g.source, g.target) if side == LEFT else (g.target, g.source)
        if mat is None:
            mat = Matrix.zero(f, dims[src], dims[tgt])
        if not isinstance(mat, Matrix):
            mat = Matrix(f, mat)
        if mat.rows != dims[src] or mat.cols != dims[tgt]:
            raise ValueError(
                f"arrow {g.label}: expected shape {dims[src]}x{dims[tgt]}, "
                f"got {mat.rows}x{mat.cols}"
            )
        mats.append(mat)
    return module_from_generators(a, side, dims, mats, check=check)


# -- regular modules and the standard indecomposables ---------------------------


def regular_module(a: FiniteDimAlgebra, side: str) -> Module:
    """The algebra as a module over itself, in block-adapted coordinates.

    The decomposition into the idempotent summands (A e_i for the left
    side, e_i A for the right side) is recorded on the result as
    ``.summands``, a tuple of (idempotent index, submodule, inclusion).
    Coordinate r of the result corresponds to the algebra element stored
    in ``._coord_elements[r]``.
    """
    f = a.field
    if side == LEFT:
        acts = [a.left_mult_matrix(i) for i in range(a.dim)]
    else:
        acts = [a.right_mult_matrix(i) for i in range(a.dim)]
    mod, basis = module_from_raw(a, side, acts, check=False)
    mod._coord_elements = basis.entries  # row r = algebra element of coordinate r
    inv = invert(basis)
    summands = []
    for i in range(a.n_idempotents):
        # A e_i = image of right multiplication by e_i (resp. e_i A, left)
        op = a.right_mult_of(a.idempotents[i]) if side == LEFT else a.left_mult_of(a.idempotents[i])
        rows_alg = row_space(op)  # spanning rows in algebra coordinates
        sub, incl = submodule(mod, rows_alg @ inv)
        sub._coord_elements = (incl.matrix @ basis).entries
        summands.append((i, sub, incl))
    mod.summands = tuple(summands)
    return mod


def projective(a: FiniteDimAlgebra, i: int, side: str = LEFT) -> Module:
    """The indecomposable projective at idempotent i (basic algebras)."""
    a.ensure_basic()
    reg = _cached_regular(a, side)
    return reg.summands[i][1]


def _cached_regular(a: FiniteDimAlgebra, side: str) -> Module:
    key = "_regular_" + side
    mod = getattr(a, key, None)
    if mod is None:
        mod = regular_module(a, side)
        setattr(a, key, mod)
    return mod


def simple(a: FiniteDimAlgebra, i: int, side: str = LEFT) -> Module:
    """The simple top of the i-th projective (basic algebras)."""
    a.ensure_basic()
    p = projective(a, i, side)
    _, t = radical_series_step(p)
    return t[0]


def injective(a: FiniteDimAlgebra, i: int, side: str = LEFT) -> Module:
    """d_dual of the opposite-side projective at i."""
    a.ensure_basic()
    other = RIGHT if side == LEFT else LEFT
    return d_dual(projective(a, i, other))


# -- submodules, quotients, kernels, cokernels ----------------------------------


def submodule(m: Module, spanning_rows: Matrix, check=False):
    """The submodule spanned by the given row vectors.

    Returns (sub, inclusion).  The rows must span an action-invariant
    subspace; set check=True to verify invariance.
    """
    f = m.algebra.field
    v = row_space(spanning_rows)
    if check:
        for k in range(m.algebra.dim):
            if not row_space_contains(v, v @ m.act[k]):
                raise ValueError("rows do not span an invariant subspace")
    blocks = []
    dims = []
    for i in range(len(m.dims)):
        bi = row_space(v @ m.projector(i))
        blocks.append(bi)
        dims.append(bi.rows)
    basis = blocks[0]
    for b in blocks[1:]:
        basis = basis.vstack(b)
    if basis.rows != v.rows:
        raise ValueError("subspace is not idempotent-invariant")
    new_act = []
    for k in range(m.algebra.dim):
        na = solve_left(basis, basis @ m.act[k])
        if na is None:
            raise ValueError("rows do not span an invariant subspace")
        new_act.append(na)
    sub = Module(m.algebra, m.side, dims, new_act, check=False)
    return sub, ModuleMap(sub, m, basis, check=False)


def quotient(m: Module, spanning_rows: Matrix):
    """The quotient by the submodule spanned by the rows.

    Returns (quot, projection).
    """
    f = m.algebra.field
    sub, incl = submodule(m, spanning_rows)
    basis = incl.matrix  # block-adapted rows, but not globally in rref
    red = rref(basis)
    piv = red.pivot_cols
    piv_set = set(piv)
    keep = [c for c in range(m.total_dim) if c not in piv_set]
    dims = []
    for i in range(len(m.dims)):
        dims.append(sum(1 for c in keep if m.offsets[i] <= c < m.offsets[i + 1]))
    z = f.zero()
    proj_rows = []
    for g in range(m.total_dim):
        vec = [z] * m.total_dim
        vec[g] = f.one()
        for t, pc in enumerate(piv):
            c = vec[pc]
            if c:
                vec = [f.sub(x, f.mul(c, y)) for x, y in zip(vec, red.reduced.entries[t])]
        proj_rows.append(tuple(vec[c] for c in keep))
    proj = Matrix(f, proj_rows, cols=len(keep), _canon=False)
    section_rows = []
    for c in keep:
        vec = [z] * m.total_dim
        vec[c] = f.one()
        section_rows.append(tuple(vec))
    section = Matrix(f, section_rows, cols=m.total_dim, _canon=False)
    new_act = [section @ m.act[k] @ proj for k in range(m.algebra.dim)]
    q = Module(m.algebra, m.side, dims, new_act, check=False)
    return q, ModuleMap(m, q, proj, check=False)


def kernel(f: ModuleMap):
    """(kernel module, canonical monomorphism into the source)."""
    rows = kernel_basis(f.matrix.transpose())
    return submodule(f.source, rows)


def image(f: ModuleMap):
    """(image module, inclusion into target, projection from source)."""
    img, incl = submodule(f.target, f.matrix)
    onto = solve_left(incl.matrix, f.matrix)
    return img, incl, ModuleMap(f.source, img, onto, check=False)


def cokernel(f: ModuleMap):
    """(cokernel module, canonical epimorphism from the target)."""
    return quotient(f.target, f.matrix)


def direct_sum(mods):
    """(sum, injections, projections); blocks are concatenated per vertex."""
    mods = list(mods)
    assert mods, "direct_sum of nothing: pass the zero module explicitly"
    a = mods[0].algebra
    f = a.field
    side = mods[0].side
    nv = a.n_idempotents
    dims = tuple(sum(m.dims[i] for m in mods) for i in range(nv))
    offs = _block_offsets(dims)
    total = sum(dims)
    # coordinate placement: per vertex, modules in order
    placements = []  # per module: list of global coords for its local coords
    used = [0] * nv
    for m in mods:
        coords = []
        for i in range(nv):
            for r in range(m.dims[i]):
                coords.append(offs[i] + used[i] + r)
            used[i] += m.dims[i]
        placements.append(coords)
    z = f.zero()
    act = []
    for k in range(a.dim):
        big = [[z] * total for _ in range(total)]
        for m, coords in zip(mods, placements):
            mk = m.act[k]
            for r in range(m.total_dim):
                gr = coords[r]
                row = mk.entries[r]
                for c in range(m.total_dim):
                    if row[c]:
                        big[gr][coords[c]] = row[c]
        act.append(Matrix(f, big, cols=total, _canon=False))
    s = Module(a, side, dims, act, check=False)
    injections = []
    projections = []
    for m, coords in zip(mods, placements):
        inj = [[z] * total for _ in range(m.total_dim)]
        for r, gr in enumerate(coords):
            inj[r][gr] = f.one()
        inj_m = Matrix(f, inj, cols=total, _canon=False)
        injections.append(ModuleMap(m, s, inj_m, check=False))
        projections.append(ModuleMap(s, m, inj_m.transpose(), check=False))
    return s, injections, projections


# -- hom spaces ------------------------------------------------------------------


def _hom_generators(a: FiniteDimAlgebra):
    """Elements whose intertwining forces full intertwining, given block structure."""
    try:
        gens = a.generators()
        return [("gen", g) for g in gens]
    except NotBasicError:
        return [("basis", i) for i in range(a.dim)]


def hom_space(m: Module, n: Module):
    """Canonical basis of Hom(m, n) as a list of ModuleMap."""
    if m.algebra is not n.algebra:
        raise SideMismatchError("modules over different algebras")
    if m.side != n.side:
        raise SideMismatchError(f"{m.side} module vs {n.side} module")
    a = m.algebra
    f = a.field
    nv = a.n_idempotents
    # unknowns: block matrices F_i of shape (m.dims[i], n.dims[i])
    u_index = {}
    for i in range(nv):
        for r in range(m.dims[i]):
            for c in range(n.dims[i]):
                u_index[(i, r, c)] = len(u_index)
    nu = len(u_index)
    if nu == 0:
        return []
    rows = []
    z = f.zero()
    for kind, g in _hom_generators(a):
        if kind == "gen":
            am = _gen_full_matrix(m, g)
            an = _gen_full_matrix(n, g)
        else:
            am = m.act[g]
            an = n.act[g]
        # act_m(g) . F - F . act_n(g) = 0
        for gr in range(m.total_dim):
            i_r = _block_of(m, gr)
            lr = gr - m.offsets[i_r]
            for gc in range(n.total_dim):
                i_c = _block_of(n, gc)
                lc = gc - n.offsets[i_c]
                row = [z] * nu
                some = False
                for r2 in range(m.dims[i_c]):
                    cf = am[gr, m.offsets[i_c] + r2]
                    if cf:
                        row[u_index[(i_c, r2, lc)]] = f.add(row[u_index[(i_c, r2, lc)]], cf)
                        some = True
                for c2 in range(n.dims[i_r]):
                    cf = an[n.offsets[i_r] + c2, gc]
                    if cf:
                        k = u_index[(i_r, lr, c2)]
                        row[k] = f.sub(row[k], cf)
                        some = True
                if some:
                    rows.append(tuple(row))
    if rows:
        sol = kernel_basis(Matrix(f, rows, cols=nu, _canon=False))
    else:
        sol = Matrix.identity(f, nu)
    out = []
    for srow in sol.entries:
        mat = [[z] * n.total_dim for _ in range(m.total_dim)]
        for (i, r, c), k in u_index.items():
            if srow[k]:
                mat[m.offsets[i] + r][n.offsets[i] + c] = srow[k]
        out.append(
            ModuleMap(m, n, Matrix(f, mat, cols=n.total_dim, _canon=False), check=False)
        )
    return out


def _block_of(m: Module, coord):
    for i in range(len(m.dims)):
        if m.offsets[i] <= coord < m.offsets[i + 1]:
            return i
    raise IndexError(coord)


def _gen_full_matrix(m: Module, g: Generator) -> Matrix:
    return m.act_of_vec(g.element)


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_space(m, n))


# -- radical, socle, top ----------------------------------------------------------


def radical_submodule(m: Module):
    """(rad m, inclusion): the image of the algebra radical acting on m."""
    m = interned(m)
    got = getattr(m, "_radical_sub", None)
    if got is not None:
        return got
    a = m.algebra
    rad = a.radical_rows()
    rows = None
    for rho in rad.entries:
        mat = m.act_of_vec(rho)
        rows = mat if rows is None else rows.vstack(mat)
    if rows is None:
        rows = Matrix.zero(a.field, 0, m.total_dim)
    got = submodule(m, rows)
    m._radical_sub = got
    return got


def radical_series_step(m: Module):
    """((rad m, incl), (top m, proj))."""
    sub_incl = radical_submodule(m)
    top_proj = quotient(m, sub_incl[1].matrix)
    return sub_incl, top_proj


def top(m: Module):
    return radical_series_step(m)[1]


def socle(m: Module):
    """(soc m, inclusion): the annihilator of the radical."""
    m = interned(m)
    got = getattr(m, "_socle_sub", None)
    if got is not None:
        return got
    a = m.algebra
    rad = a.radical_rows()
    f = a.field
    if rad.rows == 0:
        got = submodule(m, Matrix.identity(f, m.total_dim))
        m._socle_sub = got
        return got
    stacked = None
    for rho in rad.entries:
        mat = m.act_of_vec(rho)
        stacked = mat if stacked is None else stacked.hstack(mat)
    rows = kernel_basis(stacked.transpose())
    got = submodule(m, rows)
    m._socle_sub = got
    return got


def composition_factors(m: Module) -> dict:
    """Multiset {simple index: multiplicity} via the radical filtration."""
    a = m.algebra
    a.ensure_basic()
    factors = {i: 0 for i in range(a.n_idempotents)}
    current = m
    while current.total_dim > 0:
        (sub, incl), (tp, _) = radical_series_step(current)
        for i in range(a.n_idempotents):
            factors[i] += tp.dims[i]
        current = sub
    return {i: c for i, c in factors.items() if c}


# -- duality ----------------------------------------------------------------------


def d_dual(m: Module) -> Module:
    """Vector-space dual: actions transpose, the side flips, dims persist."""
    other = RIGHT if m.side == LEFT else LEFT
    return Module(m.algebra, other, m.dims, tuple(a.transpose() for a in m.act), check=False)


def d_dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(d_dual(f.target), d_dual(f.source), f.matrix.transpose(), check=False)


# -- projective covers and injective envelopes -------------------------------------


def projective_cover(m: Module) -> ModuleMap:
    """Minimal projective cover P -> m (basic algebras).

    The kernel is verified to lie in rad P; the cover of the zero module
    is the zero map from the zero module.
    """
    m = interned(m)
    got = getattr(m, "_projective_cover", None)
    if got is not None:
        return got
    a = m.algebra
    a.ensure_basic()
    f = a.field
    if m.total_dim == 0:
        cov = zero_map(zero_module(a, m.side), m)
        cov._summand_vertices = ()
        m._projective_cover = cov
        return cov
    (rad_sub, rad_incl), (tp, tp_proj) = radical_series_step(m)
    # lift each top coordinate into m: rows sect with sect . proj = identity,
    # forced into the matching idempotent block (projecting a lift is a lift)
    sect = solve_left(tp_proj.matrix, Matrix.identity(f, tp.total_dim))
    copies = []
    lift_vectors = []
    for i in range(a.n_idempotents):
        for q in range(tp.dims[i]):
            copies.append(i)
            u = Matrix(f, [sect.entries[tp.offsets[i] + q]], _canon=False) @ m.projector(i)
            lift_vectors.append(u.entries[0])
    mods = [projective(a, i, m.side) for i in copies]
    p, injections, _ = direct_sum(mods)
    rows = [None] * p.total_dim
    for t, (proj_mod, inj) in enumerate(zip(mods, injections)):
        u = Matrix(f, [lift_vectors[t]], _canon=False)
        for r in range(proj_mod.total_dim):
            elem = proj_mod._coord_elements[r]
            img = u @ m.act_of_vec(elem)
            gr = inj.matrix.entries[r].index(f.one())
            rows[gr] = img.entries[0]
    phi = ModuleMap(p, m, Matrix(f, rows, cols=m.total_dim, _canon=False), check=False)
    phi._summand_vertices = tuple(copies)
    assert rank(phi.matrix) == m.total_dim, "projective cover is not surjective"
    ker_rows = kernel_basis(phi.matrix.transpose())
    rad_p = radical_submodule(p)[1].matrix
    assert row_space_contains(row_space(rad_p), ker_rows), "cover kernel not in rad P"
    m._projective_cover = phi
    return phi


def injective_envelope(m: Module) -> ModuleMap:
    """Minimal injective envelope m -> I, via the cover of the dual."""
    cover = projective_cover(d_dual(m))
    env = d_dual_map(cover)  # m = DD(m) -> D(P)
    soc_rows = socle(env.target)[1].matrix
    assert row_space_contains(row_space(env.matrix), soc_rows), "envelope misses socle"
    return env


# -- module element action helper ---------------------------------------------------


def act_on_vector(m: Module, elem_vec, row: Matrix) -> Matrix:
    """elem . v (left) or v . elem (right) for a 1 x dim row vector v."""
    return row @ m.act_of_vec(elem_vec)


def interned(m: Module) -> Module:
    """The canonical instance of a structurally identical module.

    Lazy per-module caches (resolutions, duals) attach to instances;
    interning lets kernels and cokernels recomputed in enumeration
    harnesses share them.
    """
    a = m.algebra
    table = getattr(a, "_intern_table", None)
    if table is None:
        table = {}
        a._intern_table = table
    key = (m.side, m.dims, m.act)
    inst = table.get(key)
    if inst is None:
        table[key] = m
        inst = m
    return inst


# -- submodule enumeration (brute-force oracle substrate) ----------------------------


def enumerate_submodules(m: Module, max_vectors: int = 2**16):
    """Every action-invariant subspace, each once, canonically ordered.

    Requires a prime field with p^total_dim within the vector budget.
    Returns a list of (submodule, inclusion) sorted by (dimension,
    canonical basis signature).
    """
    a = m.algebra
    f = a.field
    if not f.is_prime_field:
        raise BudgetExceededError("submodule enumeration", "rational field", "prime fields only")
    p = f.p
    d = m.total_dim
    if p**d > max_vectors:
        raise BudgetExceededError("submodule enumeration", p**d, max_vectors)
    vectors = []
    for code in range(p**d):
        vec = []
        c = code
        for _ in range(d):
            vec.append(c % p)
            c //= p
        vectors.append(tuple(vec))

    def closure(rows):
        space = row_space(Matrix(f, rows, cols=d, _canon=False))
        while True:
            new = space
            for k in range(a.dim):
                new = new.vstack(space @ m.act[k])
            new = row_space(new)
            if new.rows == space.rows:
                return new
            space = new

    zero_sig = Matrix.zero(f, 0, d)
    seen = {zero_sig.entries: zero_sig}
    frontier = [zero_sig]
    while frontier:
        nxt = []
        for space in frontier:
            for vec in vectors:
                if not any(vec):
                    continue
                if space.rows and row_space_contains(space, Matrix(f, [vec], _canon=False)):
                    continue
                bigger = closure(list(space.entries) + [vec])
                if bigger.entries not in seen:
                    seen[bigger.entries] = bigger
                    nxt.append(bigger)
        frontier = nxt
    spaces = sorted(seen.values(), key=lambda s: (s.rows, s.entries))
    return [submodule(m, s) for s in spaces]


# -- isomorphism testing ---------------------------------------------------------------


def is_isomorphic(m: Module, n: Module, budget: int = 2**16):
    """An isomorphism m -> n, or None; deterministic search over the hom space.

    Exhaustive over F_p when p^dim(Hom) fits the budget (None is then
    definitive); otherwise a bounded coefficient grid is tried and
    UndecidedError is raised when it fails.
    """
    if m.algebra is not n.algebra or m.side != n.side:
        raise SideMismatchError("isomorphism test across algebras or sides")
    if m.dims != n.dims:
        return None
    if m.total_dim == 0:
        return zero_map(m, n)
    basis = hom_space(m, n)
    h = len(basis)
    if h == 0:
        return None
    f = m.algebra.field
    d = m.total_dim
    if f.is_prime_field and f.p**h <= budget:
        coeff_iter = itertools.product(range(f.p), repeat=h)
        exhaustive = True
    else:
        lo = [-2, -1, 0, 1, 2] if not f.is_prime_field else list(range(min(f.p, 5)))
        coeff_iter = itertools.product(lo, repeat=h)
        exhaustive = False
    for coeffs in coeff_iter:
        if not any(coeffs):
            continue
        mat = Matrix.zero(f, d, d)
        for c, b in zip(coeffs, basis):
            if c:
                mat = mat + b.matrix.scale(f.canon(c))
        if rank(mat) == d:
            return ModuleMap(m, n, mat, check=False)
    if exhaustive:
        return None
    raise UndecidedError(budget)


def is_indecomposable(m: Module, budget: int = 2**16) -> bool:
    """No nontrivial idempotent in End(m); exhaustive within the budget."""
    if m.total_dim == 0:
        return False
    ends = hom_space(m, m)
    h = len(ends)
    f = m.algebra.field
    if not f.is_prime_field or f.p**h > budget:
        raise UndecidedError(budget)
    d = m.total_dim
    ident = Matrix.identity(f, d)
    for coeffs in itertools.product(range(f.p), repeat=h):
        mat = Matrix.zero(f, d, d)
        for c, b in zip(coeffs, ends):
            if c:
                mat = mat + b.matrix.scale(c)
        if mat @ mat == mat and not mat.is_zero() and mat != ident:
            return False
    return True
