"""Exhaustive enumeration of modules and maps over prime fields.

Modules of bounded total dimension are enumerated in radical-filtration
coordinates: the basis of every vertex block is grouped by the layers
rad^k M / rad^(k+1) M, so the radical generators act by strictly
layer-lowering matrices and only those entries vary.  A candidate is
kept only when its actual filtration matches the declared layer profile
(every isomorphism class therefore shows up exactly once per profile),
validated against the relations, and finally deduplicated up to
isomorphism with cheap base-change invariants plus an exhaustive
hom-space search.  All orders are fixed, so output is bit-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import FiniteDimAlgebra
from .errors import BudgetExceededError, UndecidedError
from .linalg import Matrix, rank, row_space
from .modules import (
    LEFT,
    Module,
    ModuleMap,
    hom_space,
    injective,
    is_isomorphic,
    module_from_generators,
    projective,
    radical_submodule,
    regular_module,
    socle,
)


@dataclass
class Universe:
    """A deterministic list of pairwise non-isomorphic modules."""

    modules: list
    skipped_profiles: list = field(default_factory=list)
    budget_exhausted: bool = False


def _dim_vectors(n_vertices, max_total, min_total=0):
    for total in range(min_total, max_total + 1):
        for cut in itertools.combinations(range(total + n_vertices - 1), n_vertices - 1):
            dims = []
            prev = -1
            for c in cut:
                dims.append(c - prev - 1)
                prev = c
            dims.append(total + n_vertices - 2 - prev)
            yield tuple(dims)


def _layer_profiles(n_vertices, max_total, max_layers):
    """Sequences of per-vertex layer dim vectors, each layer nonzero."""

    def rec(remaining, layers_left):
        if layers_left == 0:
            yield ()
            return
        for head in _dim_vectors(n_vertices, remaining, 1):
            for tail in rec(remaining - sum(head), layers_left - 1):
                yield (head,) + tail

    for total in range(1, max_total + 1):
        for n_layers in range(1, min(max_layers, total) + 1):
            for prof in rec(total, n_layers):
                if sum(sum(l) for l in prof) == total:
                    yield prof


def _radical_nilpotency(a: FiniteDimAlgebra) -> int:
    rad = a.radical_rows()
    n = 1
    cur = rad
    while cur.rows:
        prods = [a.elem_mul(x, y) for x in cur.entries for y in rad.entries]
        cur = row_space(Matrix(a.field, prods, cols=a.dim, _canon=False)) if prods else cur.submatrix((), range(a.dim))
        if not prods:
            break
        n += 1
        if n > a.dim + 1:
            break
    return n


def _invariant_signature(m: Module):
    act_ranks = tuple(rank(mat) for mat in m.act)
    layers = []
    current = m
    while current.total_dim:
        sub, _ = radical_submodule(current)
        layers.append(tuple(current.dims[i] - sub.dims[i] for i in range(len(m.dims))))
        if sub.total_dim == current.total_dim:
            break
        current = sub
    soc_dims = socle(m)[0].dims
    return (m.dims, act_ranks, tuple(layers), soc_dims)


def enumerate_modules(
    a: FiniteDimAlgebra,
    side: str = LEFT,
    max_dim: int = 4,
    *,
    raw_limit: int = 1 << 18,
    iso_budget: int = 2**16,
    include_zero: bool = False,
) -> Universe:
    """All modules of total dimension <= max_dim, one per isomorphism class."""
    if not a.field.is_prime_field:
        raise BudgetExceededError("module enumeration", "rational field", "prime fields only")
    a.ensure_basic()
    gens = a.generators()
    p = a.field.p
    nv = a.n_idempotents
    max_layers = _radical_nilpotency(a)
    rel_words = list(a.presentation.relations) if a.presentation is not None else None

    def relations_hold(mats):
        for w in rel_words:
            seq = w if side == LEFT else tuple(reversed(w))
            prod = mats[seq[0]]
            for gi in seq[1:]:
                prod = prod @ mats[gi]
                if prod.is_zero():
                    break
            if not prod.is_zero():
                return False
        return True

    by_signature = {}
    order = []
    skipped = []
    for profile in _layer_profiles(nv, max_dim, max_layers):
        n_layers = len(profile)
        dims = tuple(sum(layer[v] for layer in profile) for v in range(nv))
        # vertex-block coordinates grouped by layer: layer offsets per vertex
        layer_off = []
        for v in range(nv):
            offs = [0]
            for layer in profile:
                offs.append(offs[-1] + layer[v])
            layer_off.append(offs)
        # free positions of each generator: strictly layer-lowering entries
        free_pos = []
        bits = 0
        for g in gens:
            sv, tv = (g.source, g.target) if side == LEFT else (g.target, g.source)
            pos = []
            for k in range(n_layers):
                for k2 in range(k + 1, n_layers):
                    for r in range(layer_off[sv][k], layer_off[sv][k + 1]):
                        for c in range(layer_off[tv][k2], layer_off[tv][k2 + 1]):
                            pos.append((r, c))
            free_pos.append(pos)
            bits += len(pos)
        if p**bits > raw_limit:
            skipped.append(profile)
            continue
        lower_total = sum(sum(layer) for layer in profile[1:])
        z = a.field.zero()
        for values in itertools.product(range(p), repeat=bits):
            mats = []
            vi = 0
            for g, pos in zip(gens, free_pos):
                sv, tv = (g.source, g.target) if side == LEFT else (g.target, g.source)
                rows = [[z] * dims[tv] for _ in range(dims[sv])]
                for (r, c) in pos:
                    rows[r][c] = a.field.canon(values[vi])
                    vi += 1
                mats.append(Matrix(a.field, rows, cols=dims[tv], _canon=False))
            # quick filtration check: rad M is the span of the generator
            # images, block by block; it must fill the declared lower layers
            ok = True
            for v in range(nv):
                want = sum(layer[v] for layer in profile[1:])
                block_rows = []
                for g, mt in zip(gens, mats):
                    tv = (g.target if side == LEFT else g.source)
                    if tv == v:
                        block_rows.extend(mt.entries)
                got = (
                    rank(Matrix(a.field, block_rows, cols=dims[v], _canon=False))
                    if block_rows
                    else 0
                )
                if got != want:
                    ok = False
                    break
            if not ok:
                continue
            if rel_words is not None:
                if not relations_hold(mats):
                    continue
                cand = module_from_generators(a, side, dims, mats, check=False)
            else:
                try:
                    cand = module_from_generators(a, side, dims, mats, check=True)
                except ValueError:
                    continue
            sig = _invariant_signature(cand)
            if sig[2] != profile:
                continue  # true filtration differs; it appears under its own profile
            bucket = by_signature.setdefault(sig, [])
            duplicate = False
            for seen in bucket:
                try:
                    if is_isomorphic(seen, cand, budget=iso_budget) is not None:
                        duplicate = True
                        break
                except UndecidedError:
                    continue  # keep both; harmless over-coverage
            if not duplicate:
                bucket.append(cand)
                order.append(cand)
    order.sort(key=lambda m: (m.total_dim, m.signature()))
    if include_zero:
        from .modules import zero_module

        order.insert(0, zero_module(a, side))
    return Universe(order, skipped, bool(skipped))


def standard_modules(a: FiniteDimAlgebra, side: str = LEFT):
    """The indecomposable projectives and injectives plus the regular module."""
    mods = [projective(a, i, side) for i in range(a.n_idempotents)]
    mods += [injective(a, i, side) for i in range(a.n_idempotents)]
    mods.append(regular_module(a, side))
    return mods


def harness_universe(a: FiniteDimAlgebra, side: str = LEFT, max_dim: int = 4, **kw) -> Universe:
    """Enumerated modules augmented with the standard ones (beyond the budget).

    Kernel-closure witnesses typically involve maps between projectives,
    so those are always present regardless of the dimension budget.
    """
    uni = enumerate_modules(a, side, max_dim, **kw)
    mods = list(uni.modules)
    for extra in standard_modules(a, side):
        dup = False
        for seen in mods:
            if seen.dims != extra.dims:
                continue
            try:
                if is_isomorphic(seen, extra) is not None:
                    dup = True
                    break
            except UndecidedError:
                continue
        if not dup:
            mods.append(extra)
    return Universe(mods, uni.skipped_profiles, uni.budget_exhausted)


def enumerate_maps(m: Module, n: Module, max_maps: int = 64):
    """Deterministic list of nonzero maps m -> n and an exhaustiveness flag.

    All of Hom(m, n) when its size fits in max_maps; otherwise the full
    basis plus pairwise sums up to the cap (the basis is never truncated).
    """
    basis = hom_space(m, n)
    h = len(basis)
    if h == 0:
        return [], True
    f = m.algebra.field
    p = f.p
    if p**h - 1 <= max_maps:
        out = []
        for coeffs in itertools.product(range(p), repeat=h):
            if not any(coeffs):
                continue
            mat = basis[0].matrix.scale(coeffs[0])
            for c, b in zip(coeffs[1:], basis[1:]):
                if c:
                    mat = mat + b.matrix.scale(c)
            out.append(ModuleMap(m, n, mat, check=False))
        return out, True
    out = list(basis)
    seen = {b.matrix for b in basis}
    for i in range(h):
        for j in range(i + 1, h):
            if len(out) >= max_maps:
                return out, False
            mat = basis[i].matrix + basis[j].matrix
            if not mat.is_zero() and mat not in seen:
                seen.add(mat)
                out.append(ModuleMap(m, n, mat, check=False))
    return out, False
