"""The category of reflexive modules: predicates, hulls, kernels and
cokernels, conflations, Auslander-type condition checkers, and the
budget-bounded certification harnesses for the quasi-abelian / abelian
characterizations and for Serre-subcategory exact structures.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .algebra import FiniteDimAlgebra
from .enumeration import enumerate_maps, harness_universe
from .errors import (
    ConditionFailsError,
    NotInDError,
    PreconditionUnverifiedError,
)
from .homology import (
    AtLeast,
    evaluation,
    ext_dims_up_to,
    grade,
    min_inj_resolution_of_regular,
    pd_at_most,
    sgrade,
    sgrade_at_least,
    star_dual,
    star_dual_map,
    transpose,
)
from .linalg import Matrix, kernel_basis, rank, row_space
from .modules import (
    LEFT,
    Module,
    ModuleMap,
    cokernel,
    composition_factors,
    direct_sum,
    hom_space,
    kernel,
    quotient,
    simple,
    zero_module,
    _cached_regular,
)

ENV_BUDGET = "REFLEXA_BUDGET"


@dataclass(frozen=True)
class Budget:
    """Search budgets for the enumeration harnesses.

    dim: total-dimension bound for module enumeration;
    maps: per-pair cap on enumerated homomorphisms;
    subspace: cap on p^dim for submodule / isomorphism searches;
    raw: cap on raw generator assignments per layer profile;
    stage2: cap on pushout/pullback stability checks.
    """

    dim: int = 4
    maps: int = 64
    subspace: int = 2**16
    raw: int = 1 << 18
    stage2: int = 300

    @staticmethod
    def from_env(base: "Budget | None" = None) -> "Budget":
        b = base or Budget()
        text = os.environ.get(ENV_BUDGET, "")
        if not text:
            return b
        kwargs = {}
        for part in text.split(","):
            if not part.strip():
                continue
            key, _, val = part.partition("=")
            key = key.strip()
            if key in ("dim", "maps", "subspace", "raw", "stage2"):
                kwargs[key] = int(val)
        return Budget(
            dim=kwargs.get("dim", b.dim),
            maps=kwargs.get("maps", b.maps),
            subspace=kwargs.get("subspace", b.subspace),
            raw=kwargs.get("raw", b.raw),
            stage2=kwargs.get("stage2", b.stage2),
        )


# -- reflexivity predicates ------------------------------------------------------


def is_torsion(m: Module) -> bool:
    """Hom(m, A) = 0; cross-checked against the evaluation map being zero."""
    by_star = star_dual(m).total_dim == 0
    by_ev = evaluation(m).is_zero()
    assert by_star == by_ev, "torsion predicates disagree (internal inconsistency)"
    return by_star


def is_n_torsion_free(m: Module, n: int) -> bool:
    if m.total_dim == 0:
        return True
    trm = transpose(m)
    if trm.total_dim == 0:
        return True
    reg = _cached_regular(m.algebra, trm.side)
    dims = ext_dims_up_to(trm, reg, n)
    return all(d == 0 for d in dims[1 : n + 1])


def is_torsion_free(m: Module) -> bool:
    return is_n_torsion_free(m, 1)


def is_reflexive(m: Module, cross_check: bool = True) -> bool:
    """2-torsion-freeness, cross-checked against the evaluation isomorphism."""
    by_ext = is_n_torsion_free(m, 2)
    if cross_check:
        by_ev = evaluation(m).is_iso()
        assert by_ext == by_ev, "reflexivity predicates disagree (internal inconsistency)"
    return by_ext


# -- hulls, kernels, cokernels in refl -------------------------------------------


@dataclass
class HullResult:
    map: ModuleMap  # m -> m**
    precondition_verified: bool


def reflexive_hull(m: Module, force: bool = False) -> HullResult:
    """The evaluation map m -> m**, the left adjoint unit under (2,2).

    Without the two-sided (2,2)-condition the hull is only returned when
    forced, tagged unverified.
    """
    cond = two_sided_22(m.algebra)
    if not cond and not force:
        raise PreconditionUnverifiedError(
            "two-sided (2,2) fails; pass force=True to get the evaluation map anyway"
        )
    ev = evaluation(m)
    if cond:
        assert is_reflexive(ev.target), "double dual failed to be reflexive under (2,2)"
        cok, _ = cokernel(ev)
        g = grade(cok, 2)
        assert isinstance(g, AtLeast) or g >= 2, "hull cokernel has grade < 2 under (2,2)"
    return HullResult(ev, cond)


def refl_kernel(f: ModuleMap):
    """The kernel in refl: the module kernel, verified reflexive."""
    _require_22(f.source.algebra)
    k, incl = kernel(f)
    assert is_reflexive(k), "kernel of a map of reflexives failed reflexivity under (2,2)"
    return k, incl


def refl_cokernel(f: ModuleMap, spot_check: bool = True):
    """The cokernel in refl: the double dual of the module cokernel.

    Returns (coker, arrow from f.target).  The universal property is
    spot-verified against a small fixed test family.
    """
    a = f.source.algebra
    _require_22(a)
    c, proj = cokernel(f)
    ev = evaluation(c)
    arrow = proj.then(ev)
    cok = ev.target
    if spot_check:
        family = [_cached_regular(a, f.source.side), f.source, f.target]
        for t in family:
            lhs = len(hom_space(cok, t))
            rhs = _dim_of_annihilating_homs(f, t)
            assert lhs == rhs, (
                f"refl cokernel universal property fails against test module {t!r}"
            )
    return cok, arrow


def _dim_of_annihilating_homs(f: ModuleMap, t: Module) -> int:
    """dim of {g : f.target -> t with f . g = 0}."""
    basis = hom_space(f.target, t)
    if not basis:
        return 0
    fld = f.source.algebra.field
    rows = [(f.matrix @ b.matrix).flatten() for b in basis]
    mat = Matrix(fld, rows, cols=f.source.total_dim * t.total_dim, _canon=False)
    return mat.rows - rank(mat)


def _require_22(a: FiniteDimAlgebra):
    if not ln_condition(a, 2, 2):
        raise ConditionFailsError("(2,2)", "left")
    if not ln_condition(a.opposite(), 2, 2):
        raise ConditionFailsError("(2,2)", "right")


# -- conflations in the maximum exact structure -----------------------------------


@dataclass
class ConflationVerdict:
    is_conflation: bool
    characterization_agreement: tuple  # the three predicates, evaluated independently


def _subobject_equal(f: ModuleMap, rows: Matrix) -> bool:
    """image(f) equals the given row space inside f.target."""
    from .linalg import row_space_contains

    fi = row_space(f.matrix)
    other = row_space(rows)
    return fi.rows == other.rows and row_space_contains(fi, other)


def _comparison_iso(f: ModuleMap, g: ModuleMap):
    """The canonical map coker(f)** -> g.target induced by g, or None.

    Requires g to kill the image of f.
    """
    c, proj = cokernel(f)
    if not (f.matrix @ g.matrix).is_zero():
        return None, None
    from .linalg import solve

    gbar = solve(proj.matrix, g.matrix)  # c -> target with proj . gbar = g
    if gbar is None:
        return None, None
    gbar_map = ModuleMap(c, g.target, gbar, check=False)
    gss = star_dual_map(star_dual_map(gbar_map))  # c** -> target**
    ev_c = evaluation(c)
    ev_n = evaluation(g.target)
    if not ev_n.is_iso():
        return None, None
    from .linalg import invert

    u = gss.matrix @ invert(ev_n.matrix)
    return ev_c, ModuleMap(ev_c.target, g.target, u, check=False)


def is_conflation(f: ModuleMap, g: ModuleMap) -> ConflationVerdict:
    """Evaluate the three equivalent conflation characterizations independently.

    (i) kernel-cokernel pair computed in refl; (ii) the factorization
    through the reflexive hull of the cokernel; (iii) exactness in mod
    plus the cokernel of g having strong grade >= 2.  Their agreement is
    asserted (it is a theorem under the two-sided (2,2)-condition).
    """
    a = f.source.algebra
    _require_22(a)
    for end in (f.source, f.target, g.target):
        if not is_reflexive(end):
            raise ConditionFailsError("reflexive endpoints", None)
    if f.target is not g.source and f.target != g.source:
        raise ValueError("maps are not composable")

    # (i): f = ker(g) in refl and g = coker(f) in refl
    kmod, kincl = refl_kernel(g)
    cond_i = f.is_mono() and _subobject_equal(f, kincl.matrix)
    if cond_i:
        ev_c, u = _comparison_iso(f, g)
        cond_i = u is not None and u.is_iso()

    # (ii): f = ker g in mod, coker f torsion-free, g factors through the hull
    kk, kkincl = kernel(g)
    cond_ii = f.is_mono() and _subobject_equal(f, kkincl.matrix)
    if cond_ii:
        c, _ = cokernel(f)
        cond_ii = is_torsion_free(c)
        if cond_ii:
            ev_c, u = _comparison_iso(f, g)
            cond_ii = u is not None and u.is_iso()

    # (iii): 0 -> L -> M -> N exact in mod and sgrade(coker g) >= 2
    exact = (
        f.is_mono()
        and (f.matrix @ g.matrix).is_zero()
        and _subobject_equal(f, kernel_basis(g.matrix.transpose()))
    )
    cokg, _ = cokernel(g)
    cond_iii = exact and sgrade_at_least(cokg, 2)

    agreement = (cond_i, cond_ii, cond_iii)
    assert cond_i == cond_ii == cond_iii, (
        f"conflation characterizations disagree: {agreement}"
    )
    return ConflationVerdict(cond_i, agreement)


# -- Auslander-type conditions -----------------------------------------------------


def ln_condition(a: FiniteDimAlgebra, l: int, n: int) -> bool:
    """pd I^i <= l - 1 for the first n terms of the regular's injective resolution."""
    cache = getattr(a, "_ln_cache", None)
    if cache is None:
        cache = {}
        a._ln_cache = cache
    key = (l, n)
    if key in cache:
        return cache[key]
    res = min_inj_resolution_of_regular(a, n - 1)
    verdict = True
    for i in range(n):
        if i >= len(res.terms):
            break
        if not pd_at_most(res.terms[i], l - 1):
            verdict = False
            break
    cache[key] = verdict
    return verdict


def two_sided_22(a: FiniteDimAlgebra) -> bool:
    return ln_condition(a, 2, 2) and ln_condition(a.opposite(), 2, 2)


def dominant_dimension(a: FiniteDimAlgebra, cap: int = 4):
    """Number of leading projective terms of the injective resolution, capped."""
    res = min_inj_resolution_of_regular(a, cap)
    n = 0
    for i in range(min(cap, len(res.terms))):
        if pd_at_most(res.terms[i], 0):
            n += 1
        else:
            return n
    # all computed terms projective: either the resolution ended inside
    # projectives or the cap was reached
    return AtLeast(cap)


# -- reports -------------------------------------------------------------------------


@dataclass
class ConditionCheck:
    name: str
    verdict: str  # "holds" | "fails" | "undetermined"
    witness: str = ""
    budget: str = ""

    def to_json(self):
        out = {"name": self.name, "verdict": self.verdict}
        if self.witness:
            out["witness"] = self.witness
        if self.budget:
            out["budget"] = self.budget
        return out


@dataclass
class ConditionReport:
    algebra: str
    checks: list = field(default_factory=list)
    ln_matrix: dict = field(default_factory=dict)  # (l, n) -> {"left": bool, "right": bool}
    dominant_dimension: object = None

    def to_json(self):
        ln = {
            f"({l},{n})": {"left": v["left"], "right": v["right"]}
            for (l, n), v in sorted(self.ln_matrix.items())
        }
        dd = (
            f"at_least({self.dominant_dimension.value})"
            if isinstance(self.dominant_dimension, AtLeast)
            else self.dominant_dimension
        )
        return {
            "algebra": self.algebra,
            "checks": [c.to_json() for c in self.checks],
            "ln_conditions": ln,
            "dominant_dimension": dd,
        }

    @property
    def exit_status(self) -> int:
        verdicts = [c.verdict for c in self.checks]
        for v in self.ln_matrix.values():
            verdicts.append("holds" if (v["left"] and v["right"]) else "fails")
        if any(v == "fails" for v in verdicts):
            return 1
        if any(v == "undetermined" for v in verdicts):
            return 2
        return 0


def condition_report(a: FiniteDimAlgebra, ln_pairs=((1, 2), (2, 2)), cap: int = 4) -> ConditionReport:
    rep = ConditionReport(algebra=a.name or "algebra")
    for (l, n) in ln_pairs:
        rep.ln_matrix[(l, n)] = {
            "left": ln_condition(a, l, n),
            "right": ln_condition(a.opposite(), l, n),
        }
    rep.dominant_dimension = dominant_dimension(a, cap)
    rep.checks.append(
        ConditionCheck(
            "two_sided_(2,2)",
            "holds" if two_sided_22(a) else "fails",
            budget=f"cap={cap}",
        )
    )
    return rep


# -- certification harnesses ----------------------------------------------------------


@dataclass
class CertifyResult:
    name: str
    algebra: str
    status: str  # "consistent" | "undetermined" | "theorem_violation"
    condition_holds: bool
    counterexample: str = ""
    detail: dict = field(default_factory=dict)

    def to_json(self):
        out = {
            "check": self.name,
            "algebra": self.algebra,
            "status": self.status,
            "condition_holds": self.condition_holds,
        }
        if self.counterexample:
            out["counterexample"] = self.counterexample
        out.update({k: self.detail[k] for k in sorted(self.detail)})
        return out


def _reflexive_universe(a: FiniteDimAlgebra, budget: Budget):
    cache = getattr(a, "_universe_cache", None)
    if cache is None:
        cache = {}
        a._universe_cache = cache
    key = (budget.dim, budget.raw, budget.subspace)
    got = cache.get(key)
    if got is not None:
        return got
    from .modules import interned

    uni = harness_universe(a, LEFT, budget.dim, raw_limit=budget.raw, iso_budget=budget.subspace)
    uni.modules = [interned(m) for m in uni.modules]
    refl = []
    for m in uni.modules:
        if m.total_dim and is_reflexive(m):
            refl.append(m)
    cache[key] = (uni, refl)
    return uni, refl


def _module_label(m: Module) -> str:
    return f"dims={m.dims}"


def _map_label(f: ModuleMap) -> str:
    return f"{_module_label(f.source)} -> {_module_label(f.target)}"


def _kernel_closure_counterexample(a: FiniteDimAlgebra, budget: Budget):
    """A map between reflexives with non-reflexive kernel, if one exists in budget."""
    uni, refl = _reflexive_universe(a, budget)
    verdict_cache = {}
    exhaustive = not uni.budget_exhausted
    for m in refl:
        for n in refl:
            maps, full = enumerate_maps(m, n, budget.maps)
            exhaustive = exhaustive and full
            for fm in maps:
                k, _ = kernel(fm)
                if k.total_dim == 0 or k.total_dim == m.total_dim:
                    continue
                sig = k.signature()
                verdict = verdict_cache.get(sig)
                if verdict is None:
                    verdict = is_reflexive(k)
                    verdict_cache[sig] = verdict
                if not verdict:
                    return (
                        f"map {_map_label(fm)} between reflexives has "
                        f"non-reflexive kernel of dims {k.dims}"
                    ), exhaustive
    return None, exhaustive


def _inflation_data(f: ModuleMap):
    """(is_inflation, hull_arrow target data) under stage-1-verified formulas."""
    c, proj = cokernel(f)
    ev_c = evaluation(c)
    q = proj.then(ev_c)  # target -> C**
    krows = kernel_basis(q.matrix.transpose())
    return f.is_mono() and _subobject_equal(f, krows), q


def _is_deflation(g: ModuleMap) -> bool:
    """g = coker(ker g) in refl, via the canonical comparison isomorphism."""
    _, kincl = kernel(g)
    _, u = _comparison_iso(kincl, g)
    return u is not None and u.is_iso()


def certify_quasi_abelian(a: FiniteDimAlgebra, budget: Budget | None = None) -> CertifyResult:
    """Budget-bounded counterexample search vs the two-sided (2,2) verdict.

    Stage 1 tests kernel closure on both sides (kernel and cokernel
    existence); stage 2 tests pushout/pullback stability of inflations
    and deflations using the hull-of-pushout recipe.  The empirical
    verdict is compared with the condition checker; a verifiable
    counterexample on a two-sided-(2,2) algebra would be a theorem
    violation.
    """
    budget = budget or Budget()
    cond = two_sided_22(a)
    name = a.name or "algebra"
    detail = {"budget_dim": budget.dim, "budget_maps": budget.maps}

    witness, exhaustive = _kernel_closure_counterexample(a, budget)
    if witness is not None:
        witness = "kernels: " + witness
    else:
        op_witness, op_exh = _kernel_closure_counterexample(a.opposite(), budget)
        exhaustive = exhaustive and op_exh
        if op_witness is not None:
            witness = "cokernels (opposite-side kernels): " + op_witness

    stage2_done = 0
    if witness is None:
        uni, refl = _reflexive_universe(a, budget)
        pairs = []
        for m in refl:
            for n in refl:
                maps, full = enumerate_maps(m, n, budget.maps)
                exhaustive = exhaustive and full
                for fm in maps:
                    pairs.append(fm)
        # small maps first: instability witnesses live on small modules and
        # their pushouts are cheap, so the cap trims only the expensive tail
        pairs.sort(key=lambda fm: (fm.source.total_dim + fm.target.total_dim,
                                   fm.source.signature(), fm.target.signature(),
                                   tuple(map(str, fm.matrix.flatten()))))
        refl_sorted = sorted(refl, key=lambda m: (m.total_dim, m.signature()))
        # pushout stability of inflations
        for fm in pairs:
            if stage2_done >= budget.stage2 or witness is not None:
                break
            is_infl, _ = _inflation_data(fm)
            if not is_infl:
                continue
            for t in refl_sorted:
                if stage2_done >= budget.stage2 or witness is not None:
                    break
                gmaps, full = enumerate_maps(fm.source, t, budget.maps)
                exhaustive = exhaustive and full
                for gm in gmaps:
                    stage2_done += 1
                    if stage2_done >= budget.stage2:
                        exhaustive = False
                        break
                    h = _pushout_in_refl(fm, gm)
                    ok, _ = _inflation_data(h)
                    if not ok:
                        witness = (
                            f"pushout of inflation {_map_label(fm)} along "
                            f"{_map_label(gm)} is not an inflation"
                        )
                        break
        # pullback stability of deflations
        for gm in pairs:
            if stage2_done >= budget.stage2 or witness is not None:
                break
            if not _is_deflation(gm):
                continue
            for t in refl_sorted:
                if stage2_done >= budget.stage2 or witness is not None:
                    break
                tmaps, full = enumerate_maps(t, gm.target, budget.maps)
                exhaustive = exhaustive and full
                for tm in tmaps:
                    stage2_done += 1
                    if stage2_done >= budget.stage2:
                        exhaustive = False
                        break
                    pb = _pullback_in_refl(gm, tm)
                    if not _is_deflation(pb):
                        witness = (
                            f"pullback of deflation {_map_label(gm)} along "
                            f"{_map_label(tm)} is not a deflation"
                        )
                        break
    detail["stage2_checks"] = stage2_done
    detail["search_exhaustive"] = exhaustive

    if witness is not None and cond:
        return CertifyResult("quasi_abelian", name, "theorem_violation", cond, witness, detail)
    if witness is not None and not cond:
        return CertifyResult("quasi_abelian", name, "consistent", cond, witness, detail)
    if witness is None and cond:
        return CertifyResult("quasi_abelian", name, "consistent", cond, "", detail)
    return CertifyResult("quasi_abelian", name, "undetermined", cond, "", detail)


def _pushout_in_refl(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    """Push out the inflation f: L -> M along g: L -> N; returns N -> Y**."""
    assert f.source == g.source
    mn, injs, _ = direct_sum([f.target, g.target])
    glue = f.matrix @ injs[0].matrix - g.matrix @ injs[1].matrix
    y, proj = quotient(mn, glue)
    ev_y = evaluation(y)
    return injs[1].then(proj).then(ev_y)


def _pullback_in_refl(g: ModuleMap, t: ModuleMap) -> ModuleMap:
    """Pull back the deflation g: M -> N along t: T -> N; returns P -> T."""
    mt, injs, projs = direct_sum([g.source, t.source])
    diff = ModuleMap(
        mt,
        g.target,
        projs[0].matrix @ g.matrix - projs[1].matrix @ t.matrix,
        check=False,
    )
    p, incl = kernel(diff)
    return incl.then(projs[1])


def certify_abelian(a: FiniteDimAlgebra, budget: Budget | None = None) -> CertifyResult:
    """Admissibility of every enumerated mono and epi vs ddim >= 2.

    Additionally tests the torsion characterization directly: ddim >= 2
    iff every enumerated torsion module has strong grade >= 2.
    """
    budget = budget or Budget()
    name = a.name or "algebra"
    dd = dominant_dimension(a, 2)
    dd_ge_2 = isinstance(dd, AtLeast) or dd >= 2
    detail = {"budget_dim": budget.dim, "dominant_dimension_cap2": str(dd)}

    witness = None
    exhaustive = True
    if not two_sided_22(a):
        qa = certify_quasi_abelian(a, budget)
        if qa.counterexample:
            witness = "not quasi-abelian: " + qa.counterexample
        exhaustive = qa.detail.get("search_exhaustive", False)
    else:
        uni, refl = _reflexive_universe(a, budget)
        exhaustive = not uni.budget_exhausted
        for m in refl:
            if witness is not None:
                break
            for n in refl:
                if witness is not None:
                    break
                maps, full = enumerate_maps(m, n, budget.maps)
                exhaustive = exhaustive and full
                for fm in maps:
                    c, _ = cokernel(fm)
                    if fm.is_mono():
                        if not is_torsion_free(c):
                            witness = (
                                f"non-admissible monomorphism {_map_label(fm)}: "
                                f"cokernel of dims {c.dims} is not torsion-free"
                            )
                            break
                    if c.total_dim == 0 or is_torsion(c):
                        # an epimorphism in refl; admissible iff sgrade(coker) >= 2
                        if not sgrade_at_least(c, 2):
                            witness = (
                                f"non-admissible epimorphism {_map_label(fm)}: "
                                f"mod-cokernel of dims {c.dims} has sgrade < 2"
                            )
                            break

    # the torsion criterion, tested directly on the enumerated universe:
    # a torsion module of sgrade < 2 soundly certifies ddim < 2, and under
    # ddim >= 2 no such module can exist at all
    tors_witness = None
    uni2, _ = _reflexive_universe(a, budget)
    for m in uni2.modules:
        if m.total_dim and is_torsion(m) and not sgrade_at_least(m, 2):
            tors_witness = f"torsion module dims={m.dims} with sgrade < 2"
            break
    detail["torsion_witness"] = tors_witness or ""
    detail["search_exhaustive"] = exhaustive and not uni2.budget_exhausted

    if dd_ge_2 and (witness is not None or tors_witness is not None):
        return CertifyResult(
            "abelian", name, "theorem_violation", dd_ge_2, witness or tors_witness, detail
        )
    if not dd_ge_2 and witness is None:
        return CertifyResult("abelian", name, "undetermined", dd_ge_2, "", detail)
    return CertifyResult("abelian", name, "consistent", dd_ge_2, witness or "", detail)


# -- Serre-subcategory exact structures ------------------------------------------------


@dataclass
class SerreStructure:
    algebra: FiniteDimAlgebra
    simple_set: frozenset
    report: dict

    def contains(self, m: Module) -> bool:
        """Membership in the Serre subcategory generated by the simples."""
        if m.total_dim == 0:
            return True
        return set(composition_factors(m)) <= self.simple_set

    def is_conflation(self, f: ModuleMap, g: ModuleMap) -> bool:
        """0 -> L -> M -> N exact in mod with coker(g) in the subcategory."""
        if not f.is_mono():
            return False
        if not (f.matrix @ g.matrix).is_zero():
            return False
        if rank(f.matrix) + rank(g.matrix) != f.target.total_dim:
            return False
        if not _subobject_equal(f, kernel_basis(g.matrix.transpose())):
            return False
        cokg, _ = cokernel(g)
        return self.contains(cokg)


def serre_exact_structure(
    a: FiniteDimAlgebra, simple_set, budget: Budget | None = None
) -> SerreStructure:
    """The exact structure induced by a Serre subcategory of sgrade >= 2 simples.

    Validates the choice (each simple needs sgrade >= 2), checks the
    exact-structure axioms on enumerated instances, and verifies that
    the produced conflations regenerate exactly the chosen simples.
    """
    budget = budget or Budget()
    _require_22(a)
    simple_set = frozenset(simple_set)
    for i in sorted(simple_set):
        s = simple(a, i)
        if not sgrade_at_least(s, 2):
            raise NotInDError(i, sgrade(s, 2))
    struct = SerreStructure(a, simple_set, {})
    report = {
        "simples": sorted(simple_set),
        "axioms": {},
        "regenerated": [],
        "budget_dim": budget.dim,
    }


    uni, refl = _reflexive_universe(a, budget)
    refl = sorted(refl, key=lambda m: (m.total_dim, m.signature()))
    # collect inflations, deflations and full conflations, bounded; pairs of
    # large modules are skipped (recorded) to keep the harness proportionate
    dim_cap = 4 * budget.dim
    skipped_pairs = 0
    conflations = []
    inflations = []
    deflations = []
    checked = 0
    for m in refl:
        for n in refl:
            if m.total_dim + n.total_dim > dim_cap:
                skipped_pairs += 1
                continue
            maps, _ = enumerate_maps(m, n, budget.maps)
            for fm in maps:
                checked += 1
                if checked > budget.stage2:
                    break
                # deflation test: kernel exists (reflexive), coker in A
                cokf, _ = cokernel(fm)
                if struct.contains(cokf):
                    deflations.append(fm)
                # inflation test: mono, coker torsion-free, Ext^2(Tr coker) in A
                if fm.is_mono():
                    if is_torsion_free(cokf):
                        e2 = _ext2_of_tr(cokf)
                        if struct.contains(e2):
                            inflations.append(fm)
                            conflations.append((fm, _hull_arrow_from(fm, cokf)))

    # axiom (i): split conflations belong
    split_ok = True
    for m in refl[: min(len(refl), 4)]:
        for n in refl[: min(len(refl), 4)]:
            s, injs, projs = direct_sum([m, n])
            if not struct.is_conflation(injs[0], projs[1]):
                split_ok = False
    report["axioms"]["split_conflations"] = split_ok

    # axiom (ii): compositions of inflations / deflations
    comp_ok = True
    count = 0
    for f1 in inflations:
        for f2 in inflations:
            if f1.target != f2.source or count > budget.stage2:
                continue
            count += 1
            comp = f1.then(f2)
            c, _ = cokernel(comp)
            if not (comp.is_mono() and is_torsion_free(c) and struct.contains(_ext2_of_tr(c))):
                comp_ok = False
    for g1 in deflations:
        for g2 in deflations:
            if g1.target != g2.source or count > budget.stage2:
                continue
            count += 1
            comp = g1.then(g2)
            c, _ = cokernel(comp)
            if not struct.contains(c):
                comp_ok = False
    report["axioms"]["composition_closure"] = comp_ok

    # axiom (iii): pushouts of inflations, pullbacks of deflations
    po_ok = True
    count = 0
    for fm in inflations:
        if count > budget.stage2:
            break
        for t in refl[: min(len(refl), 6)]:
            gmaps, _ = enumerate_maps(fm.source, t, min(budget.maps, 8))
            for gm in gmaps:
                count += 1
                if count > budget.stage2:
                    break
                h = _pushout_in_refl(fm, gm)
                c, _ = cokernel(h)
                if not (h.is_mono() and is_torsion_free(c) and struct.contains(_ext2_of_tr(c))):
                    po_ok = False
    for gm in deflations:
        if count > budget.stage2:
            break
        for t in refl[: min(len(refl), 6)]:
            tmaps, _ = enumerate_maps(t, gm.target, min(budget.maps, 8))
            for tm in tmaps:
                count += 1
                if count > budget.stage2:
                    break
                pb = _pullback_in_refl(gm, tm)
                c, _ = cokernel(pb)
                if not struct.contains(c):
                    po_ok = False
    report["axioms"]["pushout_pullback_closure"] = po_ok
    report["axioms"]["constructed_conflations_valid"] = all(
        struct.is_conflation(fm, gm) for fm, gm in conflations
    )

    # roundtrip: cokernels of deflations regenerate exactly the simple set
    regenerated = set()
    for gm in deflations:
        c, _ = cokernel(gm)
        regenerated |= set(composition_factors(c))
    # realize each chosen simple via its second syzygy sequence
    from .homology import min_proj_resolution

    for i in sorted(simple_set):
        s = simple(a, i)
        res = min_proj_resolution(s, 2)
        if len(res.terms) >= 2:
            d0 = res.differentials[0]
            verdict = struct.is_conflation(*_syzygy_conflation(res))
            if verdict:
                regenerated.add(i)
            else:
                report["axioms"]["projective_realization_" + str(i)] = False
    report["regenerated"] = sorted(regenerated)
    report["roundtrip_exact"] = regenerated == set(simple_set)
    report["pairs_skipped_by_dim_cap"] = skipped_pairs
    struct.report = report
    return struct


def _syzygy_conflation(res):
    """(Omega^2 A -> P1, P1 -> P0) from a depth-2 minimal resolution."""
    d0 = res.differentials[0]  # P1 -> P0
    syz, incl = kernel(d0)
    return incl, d0


def _ext2_of_tr(c: Module) -> Module:
    from .homology import ext_regular_module

    trc = transpose(c)
    if trc.total_dim == 0:
        return zero_module(c.algebra, c.side)
    return ext_regular_module(trc, 2)


def _hull_arrow_from(f: ModuleMap, cokf: Module) -> ModuleMap:
    c, proj = cokernel(f)
    ev = evaluation(c)
    return proj.then(ev)
