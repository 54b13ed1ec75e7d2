"""Batch front end: workspace files, checks, canonical reports.

Workspaces are JSON documents with three top-level keys:

  "algebras": name -> {"field": "F2"|"Q"|{"p": 5},
                       "quiver": {"vertices": n, "arrows": [{"name","src","dst"}]},
                       "relations": [["a","b"], ...]}
              or      {"field": ..., "basis": [...], "table": [[[coeffs]]],
                       "unit": [...], "idempotents": [[...]]}
  "modules":  name -> {"algebra": ..., "side": "left"|"right",
                       "dims": {"0": 1, ...} or "total": n,
                       "actions": {"a": [["1","0"],...]} (per arrow)
                       or {"basis": {"label": matrix, ...}} (per basis element)}
  "jobs":     [{"command": "check-conditions", "algebra": "kA2",
                "ln": [[2,2],[1,2]], "cap": 4}, ...]

Matrix entries are field-element strings ("3", "2/5") or plain numbers.
Reports are emitted as JSON with sorted keys and no timestamps; exit
status is 0 for all-holds/consistent, 1 for any fails verdict, 2 for
undetermined-only outcomes, 3 for input errors.  The environment
variable REFLEXA_BUDGET ("dim=4,maps=64,subspace=65536,stage2=300")
overrides the default enumeration budgets.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ._json import Diagnostic, parse_with_positions
from .algebra import FiniteDimAlgebra, Quiver, bound_quiver_algebra, from_table
from .errors import NotInDError, ReflexaError, TheoremViolationError
from .fields import parse_field
from .homology import (
    AtLeast,
    ab_sequence,
    grade,
    min_proj_resolution,
    sgrade,
)
from .linalg import Matrix
from .modules import (
    LEFT,
    RIGHT,
    Module,
    ModuleMap,
    d_dual,
    hom_space,
    module_from_arrows,
    module_from_raw,
)
from .refl import (
    Budget,
    certify_abelian,
    certify_quasi_abelian,
    condition_report,
    is_conflation,
    is_reflexive,
    is_torsion,
    is_torsion_free,
    refl_cokernel,
    refl_kernel,
    reflexive_hull,
    serre_exact_structure,
)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_UNDETERMINED = 2
EXIT_INPUT = 3


@dataclass
class WorkspaceFile:
    algebras: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    jobs: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.diagnostics


def _fmt(value):
    if isinstance(value, AtLeast):
        return f"at_least({value.value})"
    return value


def _parse_matrix(fieldspec, data, diag, path):
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        diag(path, "matrix must be an array of arrays")
        return None
    try:
        return Matrix(fieldspec, [[fieldspec.canon(x) for x in row] for row in data])
    except (ValueError, ZeroDivisionError) as e:
        diag(path, f"bad matrix entry: {e}")
        return None


def parse_workspace(text: str) -> WorkspaceFile:
    """Total workspace parser: never raises, collects positioned diagnostics."""
    ws = WorkspaceFile()
    doc, positions, diags = parse_with_positions(text)
    ws.diagnostics.extend(diags)
    if doc is None:
        return ws

    def diag(path, message):
        line, col = positions.get(path, (1, 1))
        ws.diagnostics.append(Diagnostic(line, col, message))

    if not isinstance(doc, dict):
        diag("", "workspace must be a JSON object")
        return ws
    for key in doc:
        if key not in ("algebras", "modules", "jobs"):
            diag(f"/{key}", f"unknown top-level key {key!r}")

    algebras = doc.get("algebras", {})
    if not isinstance(algebras, dict):
        diag("/algebras", "algebras must be an object")
        algebras = {}
    for name in algebras:
        path = f"/algebras/{name}"
        spec = algebras[name]
        if not isinstance(spec, dict):
            diag(path, "algebra description must be an object")
            continue
        try:
            fieldspec = parse_field(spec.get("field", "F2"))
        except ValueError as e:
            diag(path + "/field", str(e))
            continue
        try:
            if "quiver" in spec:
                q = spec["quiver"]
                arrows = [
                    (arr["name"], int(arr["src"]), int(arr["dst"]))
                    for arr in q.get("arrows", [])
                ]
                quiver = Quiver.make(int(q.get("vertices", 0)), arrows)
                rels = spec.get("relations", [])
                for ri, rel in enumerate(rels):
                    if not isinstance(rel, list) or len(rel) < 2:
                        diag(f"{path}/relations/{ri}", "relations must have length >= 2")
                        raise _Skip()
                ws.algebras[name] = bound_quiver_algebra(fieldspec, quiver, rels, name=name)
            elif "table" in spec:
                labels = spec.get("basis", [])
                table = [
                    [[fieldspec.canon(c) for c in cell] for cell in row]
                    for row in spec["table"]
                ]
                unit = [fieldspec.canon(c) for c in spec.get("unit", [])]
                idems = [
                    [fieldspec.canon(c) for c in e] for e in spec.get("idempotents", [])
                ]
                ws.algebras[name] = from_table(fieldspec, labels, table, unit, idems, name=name)
            else:
                diag(path, "algebra needs either a quiver or a table")
        except _Skip:
            pass
        except (ReflexaError, ValueError, KeyError, TypeError) as e:
            diag(path, f"invalid algebra: {e}")

    modules = doc.get("modules", {})
    if not isinstance(modules, dict):
        diag("/modules", "modules must be an object")
        modules = {}
    for name in modules:
        path = f"/modules/{name}"
        spec = modules[name]
        if not isinstance(spec, dict):
            diag(path, "module description must be an object")
            continue
        aname = spec.get("algebra")
        if aname not in ws.algebras:
            diag(path + "/algebra", f"unresolved algebra reference {aname!r}")
            continue
        alg = ws.algebras[aname]
        side = spec.get("side", "left")
        if side not in (LEFT, RIGHT):
            diag(path + "/side", f"side must be 'left' or 'right', got {side!r}")
            continue
        try:
            actions = spec.get("actions", {})
            if "basis" in actions:
                total = int(spec.get("total", 0))
                acts = []
                basis_acts = actions["basis"]
                for bi, label in enumerate(alg.basis_labels):
                    data = basis_acts.get(label)
                    if data is None:
                        diag(path + "/actions/basis", f"missing action for basis element {label!r}")
                        raise _Skip()
                    mat = _parse_matrix(alg.field, data, diag, f"{path}/actions/basis/{label}")
                    if mat is None or mat.rows != total or mat.cols != total:
                        diag(f"{path}/actions/basis/{label}", f"expected a {total}x{total} matrix")
                        raise _Skip()
                    acts.append(mat)
                mod, _ = module_from_raw(alg, side, acts, check=True)
                ws.modules[name] = mod
            else:
                dims_spec = spec.get("dims", {})
                dims = [0] * alg.n_idempotents
                for k, v in dims_spec.items():
                    vi = int(k)
                    if not (0 <= vi < alg.n_idempotents):
                        diag(path + "/dims", f"vertex {k} out of range")
                        raise _Skip()
                    dims[vi] = int(v)
                arrow_mats = {}
                for arrow_name, data in actions.items():
                    mat = _parse_matrix(alg.field, data, diag, f"{path}/actions/{arrow_name}")
                    if mat is None:
                        raise _Skip()
                    arrow_mats[arrow_name] = mat
                ws.modules[name] = module_from_arrows(alg, side, tuple(dims), arrow_mats, check=True)
        except _Skip:
            pass
        except (ReflexaError, ValueError, KeyError, TypeError) as e:
            diag(path, f"invalid module: {e}")

    jobs = doc.get("jobs", [])
    if not isinstance(jobs, list):
        diag("/jobs", "jobs must be an array")
        jobs = []
    for ji, job in enumerate(jobs):
        if not isinstance(job, dict) or "command" not in job:
            diag(f"/jobs/{ji}", "each job needs a 'command'")
            continue
        ws.jobs.append(job)
    return ws


class _Skip(Exception):
    pass


def _load_workspace(path):
    if path is None:
        return WorkspaceFile()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_workspace(fh.read())
    except OSError as e:
        ws = WorkspaceFile()
        ws.diagnostics.append(Diagnostic(1, 1, f"cannot read workspace: {e}"))
        return ws


def _resolve_algebra(ws: WorkspaceFile, name: str) -> FiniteDimAlgebra:
    if name in ws.algebras:
        return ws.algebras[name]
    from . import corpus

    if name in corpus.corpus_names():
        return corpus.build_algebra(name)
    raise KeyError(f"unknown algebra {name!r} (not in workspace or corpus)")


def _resolve_module(ws: WorkspaceFile, name: str) -> Module:
    base, _, alg = name.partition("@")
    if base not in ws.modules:
        raise KeyError(f"unknown module {base!r}")
    mod = ws.modules[base]
    if alg and (mod.algebra.name or "") != alg:
        raise KeyError(f"module {base!r} lives over {mod.algebra.name!r}, not {alg!r}")
    return mod


def _emit(payload, out=None):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    (out or sys.stdout).write(text)
    return text


def _map_from_coeffs(m: Module, n: Module, coeffs_text: str) -> ModuleMap:
    basis = hom_space(m, n)
    coeffs = [c.strip() for c in coeffs_text.split(",")]
    if len(coeffs) != len(basis):
        raise ValueError(
            f"hom space has dimension {len(basis)}; got {len(coeffs)} coefficients"
        )
    f = m.algebra.field
    mat = Matrix.zero(f, m.total_dim, n.total_dim)
    for c, b in zip(coeffs, basis):
        cv = f.canon(c)
        if cv:
            mat = mat + b.matrix.scale(cv)
    return ModuleMap(m, n, mat, check=False)


# -- command implementations ---------------------------------------------------------


def cmd_check_conditions(ws, args, budget):
    a = _resolve_algebra(ws, args.algebra)
    ln_pairs = tuple(tuple(int(x) for x in pair.split(",")) for pair in args.ln) or ((1, 2), (2, 2))
    rep = condition_report(a, ln_pairs, cap=args.cap)
    payload = {"command": "check-conditions", "report": rep.to_json(), "cap": args.cap}
    return payload, rep.exit_status


def cmd_invariants(ws, args, budget):
    m = _resolve_module(ws, args.module)
    cap = args.cap
    seq = ab_sequence(m)
    payload = {
        "command": "invariants",
        "module": args.module,
        "dims": list(m.dims),
        "total_dim": m.total_dim,
        "grade": _fmt(grade(m, cap)),
        "sgrade": _fmt(sgrade(m, cap)),
        "torsion": is_torsion(m),
        "torsion_free": is_torsion_free(m),
        "reflexive": is_reflexive(m),
        "ab_sequence_dims": [
            seq.a_mod.total_dim,
            seq.x_mod.total_dim,
            seq.y_mod.total_dim,
            seq.b_mod.total_dim,
        ],
        "cap": cap,
    }
    return payload, EXIT_OK


def cmd_resolve(ws, args, budget):
    m = _resolve_module(ws, args.module)
    if args.injective:
        dm = d_dual(m)
        res = min_proj_resolution(dm, args.degree)
        terms = [
            {"degree": k, "injectives": sorted(res.psums[k].vertices), "dim": t.total_dim}
            for k, t in enumerate(res.terms)
        ]
        payload = {
            "command": "resolve",
            "flavor": "injective",
            "module": args.module,
            "terms": terms,
            "length": _fmt(res.pd if res.pd is not None else AtLeast(args.degree + 1)),
            "minimal": res.minimal,
        }
    else:
        res = min_proj_resolution(m, args.degree)
        terms = [
            {"degree": k, "projectives": sorted(res.psums[k].vertices), "dim": t.total_dim}
            for k, t in enumerate(res.terms)
        ]
        payload = {
            "command": "resolve",
            "flavor": "projective",
            "module": args.module,
            "terms": terms,
            "length": _fmt(res.pd if res.pd is not None else AtLeast(args.degree + 1)),
            "minimal": res.minimal,
        }
    return payload, EXIT_OK


def cmd_refl(ws, args, budget):
    if args.refl_command == "hull":
        m = _resolve_module(ws, args.module)
        hull = reflexive_hull(m, force=args.force)
        payload = {
            "command": "refl hull",
            "module": args.module,
            "hull_dims": list(hull.map.target.dims),
            "is_isomorphism": hull.map.is_iso(),
            "precondition_verified": hull.precondition_verified,
        }
        return payload, EXIT_OK
    if args.refl_command in ("kernel", "cokernel"):
        m = _resolve_module(ws, args.source)
        n = _resolve_module(ws, args.target)
        fmap = _map_from_coeffs(m, n, args.hom)
        if args.refl_command == "kernel":
            k, _ = refl_kernel(fmap)
            payload = {"command": "refl kernel", "dims": list(k.dims), "total_dim": k.total_dim}
        else:
            c, _ = refl_cokernel(fmap)
            payload = {"command": "refl cokernel", "dims": list(c.dims), "total_dim": c.total_dim}
        return payload, EXIT_OK
    if args.refl_command == "conflation":
        l = _resolve_module(ws, args.left)
        m = _resolve_module(ws, args.middle)
        n = _resolve_module(ws, args.right)
        fmap = _map_from_coeffs(l, m, args.f)
        gmap = _map_from_coeffs(m, n, args.g)
        verdict = is_conflation(fmap, gmap)
        payload = {
            "command": "refl conflation",
            "is_conflation": verdict.is_conflation,
            "characterizations": list(verdict.characterization_agreement),
        }
        return payload, EXIT_OK if verdict.is_conflation else EXIT_FAILS
    raise KeyError(args.refl_command)


def cmd_certify(ws, args, budget):
    a = _resolve_algebra(ws, args.algebra)
    budget = Budget(
        dim=args.dim_budget or budget.dim,
        maps=budget.maps,
        subspace=budget.subspace,
        raw=budget.raw,
        stage2=budget.stage2,
    )
    if args.what == "quasi-abelian":
        res = certify_quasi_abelian(a, budget)
    else:
        res = certify_abelian(a, budget)
    payload = {"command": f"certify {args.what}", "result": res.to_json()}
    status = {
        "consistent": EXIT_OK,
        "undetermined": EXIT_UNDETERMINED,
        "theorem_violation": EXIT_FAILS,
    }[res.status]
    return payload, status


def cmd_serre(ws, args, budget):
    a = _resolve_algebra(ws, args.algebra)
    simples = [int(x) for x in args.simples.split(",")] if args.simples else []
    struct = serre_exact_structure(a, simples, budget)
    payload = {"command": "serre", "algebra": args.algebra, "report": struct.report}
    ok = all(v for v in struct.report["axioms"].values()) and struct.report["roundtrip_exact"]
    return payload, EXIT_OK if ok else EXIT_FAILS


def cmd_morita(ws, args, budget):
    from .morita import SummandList, end_algebra, verify_equivalence

    mods = [_resolve_module(ws, nm) for nm in args.summands]
    ms = SummandList.build(mods, iso_budget=budget.subspace)
    endd = end_algebra(ms)
    if args.morita_command == "end":
        payload = {
            "command": "morita end",
            "dimension": endd.algebra.dim,
            "hom_dims": {
                f"{i},{j}": len(endd.hom_bases[(i, j)])
                for i in range(endd.n_summands)
                for j in range(endd.n_summands)
            },
            "basic": endd.algebra.is_basic(),
        }
        return payload, EXIT_OK
    rep = verify_equivalence(endd, args.mode, budget)
    payload = {"command": "morita verify", "report": rep.to_json()}
    return payload, EXIT_OK if rep.all_pass else EXIT_FAILS


def cmd_corpus(ws, args, budget):
    from . import corpus

    tasks = corpus.corpus_tasks()
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = dict(pool.map(corpus.run_task, tasks))
    else:
        results = dict(corpus.run_task(t) for t in tasks)
    entries = [results[("entry", nm)] for nm in corpus.corpus_names()]
    criteria = [results[("criterion", key)] for key in sorted(corpus.CRITERIA)]
    statuses = [e["quasi_abelian"]["status"] for e in entries]
    statuses += [e["abelian"]["status"] for e in entries]
    all_criteria_pass = all(c["passed"] for c in criteria)
    payload = {
        "command": "corpus run",
        "budget": {
            "dim": budget.dim,
            "maps": budget.maps,
            "subspace": budget.subspace,
            "stage2": budget.stage2,
        },
        "algebras": entries,
        "criteria": criteria,
        "summary": {
            "consistent": sum(1 for s in statuses if s == "consistent"),
            "undetermined": sum(1 for s in statuses if s == "undetermined"),
            "theorem_violations": sum(1 for s in statuses if s == "theorem_violation"),
            "criteria_passed": all_criteria_pass,
        },
    }
    if any(s == "theorem_violation" for s in statuses) or not all_criteria_pass:
        status = EXIT_FAILS
    elif any(s == "undetermined" for s in statuses):
        status = EXIT_UNDETERMINED
    else:
        status = EXIT_OK
    return payload, status


def cmd_validate(ws, args, budget):
    payload = {
        "command": "validate",
        "algebras": sorted(ws.algebras),
        "modules": sorted(ws.modules),
        "jobs": len(ws.jobs),
        "diagnostics": [d.to_json() for d in ws.diagnostics],
    }
    return payload, EXIT_OK if ws.ok else EXIT_INPUT


def cmd_run_jobs(ws, args, budget):
    """Execute the workspace's job list; the report aggregates per-job output."""
    reports = []
    worst = EXIT_OK
    for job in ws.jobs:
        cmdname = job.get("command")
        jargs = _JobArgs(job)
        handler = {
            "check-conditions": cmd_check_conditions,
            "invariants": cmd_invariants,
            "resolve": cmd_resolve,
            "certify": cmd_certify,
            "serre": cmd_serre,
        }.get(cmdname)
        if handler is None:
            reports.append({"command": cmdname, "error": "unknown command"})
            worst = max(worst, EXIT_INPUT)
            continue
        try:
            payload, status = handler(ws, jargs, budget)
            reports.append(payload)
            worst = max(worst, status)
        except (ReflexaError, KeyError, ValueError) as e:
            reports.append({"command": cmdname, "error": str(e)})
            worst = max(worst, EXIT_INPUT)
    return {"command": "run", "jobs": reports}, worst


class _JobArgs:
    """Adapter so workspace jobs reuse the CLI handlers."""

    def __init__(self, job):
        self._job = job

    def __getattr__(self, key):
        job = object.__getattribute__(self, "_job")
        aliases = {
            "dim_budget": "dim-budget",
            "what": "what",
            "ln": "ln",
            "cap": "cap",
        }
        jkey = aliases.get(key, key.replace("_", "-"))
        if jkey in job:
            value = job[jkey]
            if key == "ln" and isinstance(value, list):
                return [",".join(str(x) for x in pair) for pair in value]
            return value
        if key in job:
            return job[key]
        defaults = {
            "cap": 4,
            "ln": [],
            "dim_budget": None,
            "injective": False,
            "degree": 4,
            "force": False,
            "simples": "",
        }
        if key in defaults:
            return defaults[key]
        raise AttributeError(key)


def build_parser():
    p = argparse.ArgumentParser(
        prog="reflexa",
        description="homological condition checking for finite-dimensional algebras",
    )
    p.add_argument("--workspace", "-w", help="workspace JSON file")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-conditions", help="(l,n)-conditions and dominant dimension")
    c.add_argument("algebra")
    c.add_argument("--ln", action="append", default=[], help="a pair like 2,2 (repeatable)")
    c.add_argument("--cap", type=int, default=4)

    c = sub.add_parser("invariants", help="grade, sgrade, torsion/reflexive flags")
    c.add_argument("module")
    c.add_argument("--cap", type=int, default=4)

    c = sub.add_parser("resolve", help="minimal (co)resolution of a module")
    c.add_argument("module")
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--injective", action="store_true")

    c = sub.add_parser("refl", help="reflexive-category constructions")
    rsub = c.add_subparsers(dest="refl_command", required=True)
    r = rsub.add_parser("hull")
    r.add_argument("module")
    r.add_argument("--force", action="store_true")
    for nm in ("kernel", "cokernel"):
        r = rsub.add_parser(nm)
        r.add_argument("source")
        r.add_argument("target")
        r.add_argument("--hom", required=True, help="coefficients in the canonical hom basis")
    r = rsub.add_parser("conflation")
    r.add_argument("left")
    r.add_argument("middle")
    r.add_argument("right")
    r.add_argument("--f", required=True)
    r.add_argument("--g", required=True)

    c = sub.add_parser("certify", help="theorem-consistency harnesses")
    c.add_argument("what", choices=["quasi-abelian", "abelian"])
    c.add_argument("algebra")
    c.add_argument("--dim-budget", type=int, default=None)

    c = sub.add_parser("serre", help="Serre-subcategory exact structure")
    c.add_argument("algebra")
    c.add_argument("--simples", default="", help="comma-separated simple indices")

    c = sub.add_parser("morita", help="endomorphism algebras and equivalences")
    msub = c.add_subparsers(dest="morita_command", required=True)
    m = msub.add_parser("end")
    m.add_argument("summands", nargs="+")
    m = msub.add_parser("verify")
    m.add_argument("summands", nargs="+")
    m.add_argument("--mode", choices=["module_category", "refl_max"], default="module_category")

    c = sub.add_parser("corpus", help="the acceptance corpus")
    csub = c.add_subparsers(dest="corpus_command", required=True)
    r = csub.add_parser("run")
    r.add_argument("--workers", type=int, default=1)

    sub.add_parser("validate", help="parse and validate the workspace")

    c = sub.add_parser("run", help="execute the workspace's job list")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    ws = _load_workspace(args.workspace)
    budget = Budget.from_env()
    if args.command not in ("validate",) and not ws.ok:
        _emit(
            {
                "command": args.command,
                "diagnostics": [d.to_json() for d in ws.diagnostics],
            }
        )
        return EXIT_INPUT
    handlers = {
        "check-conditions": cmd_check_conditions,
        "invariants": cmd_invariants,
        "resolve": cmd_resolve,
        "refl": cmd_refl,
        "certify": cmd_certify,
        "serre": cmd_serre,
        "morita": cmd_morita,
        "validate": cmd_validate,
        "run": cmd_run_jobs,
    }
    if args.command == "corpus":
        handler = cmd_corpus
    else:
        handler = handlers[args.command]
    try:
        payload, status = handler(ws, args, budget)
    except NotInDError as e:
        _emit({"command": args.command, "error": str(e)})
        return EXIT_INPUT
    except TheoremViolationError as e:
        _emit({"command": args.command, "error": f"theorem violation: {e}"})
        return EXIT_FAILS
    except (ReflexaError, KeyError, ValueError) as e:
        _emit({"command": args.command, "error": str(e)})
        return EXIT_INPUT
    _emit(payload)
    return status


if __name__ == "__main__":
    sys.exit(main())
