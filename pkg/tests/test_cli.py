"""Workspace parsing and the command-line front end."""

import json

import pytest

from reflexa import cli
from reflexa.cli import parse_workspace

WS = """
{
  "algebras": {
    "kA2": {"field": "F2",
            "quiver": {"vertices": 2, "arrows": [{"name": "a", "src": 0, "dst": 1}]},
            "relations": []},
    "T": {"field": "Q", "basis": ["1", "x"],
          "table": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]],
          "unit": ["1","0"], "idempotents": [["1","0"]]}
  },
  "modules": {
    "S1": {"algebra": "kA2", "side": "left", "dims": {"0": 1}, "actions": {}},
    "P1": {"algebra": "kA2", "side": "left", "dims": {"0": 1, "1": 1},
           "actions": {"a": [["1"]]}},
    "MT": {"algebra": "T", "side": "left", "total": 2,
           "actions": {"basis": {"1": [["1","0"],["0","1"]],
                                  "x": [["0","1"],["0","0"]]}}}
  },
  "jobs": [
    {"command": "check-conditions", "algebra": "kA2", "ln": [[2,2],[1,2]], "cap": 4},
    {"command": "invariants", "module": "S1", "cap": 4}
  ]
}
"""


class TestParseWorkspace:
    def test_minimal_valid(self):
        ws = parse_workspace(WS)
        assert ws.ok
        assert set(ws.algebras) == {"kA2", "T"}
        assert set(ws.modules) == {"S1", "P1", "MT"}
        assert len(ws.jobs) == 2

    def test_rational_table_module(self):
        ws = parse_workspace(WS)
        assert ws.modules["MT"].total_dim == 2

    def test_unresolved_reference(self):
        ws = parse_workspace(
            '{"modules": {"m": {"algebra": "ghost", "side": "left"}}}'
        )
        assert not ws.ok
        assert any("unresolved algebra reference" in d.message for d in ws.diagnostics)

    def test_short_relation(self):
        ws = parse_workspace(
            '{"algebras": {"A": {"field": "F2", '
            '"quiver": {"vertices": 1, "arrows": [{"name": "x", "src": 0, "dst": 0}]}, '
            '"relations": [["x"]]}}}'
        )
        assert any("length >= 2" in d.message for d in ws.diagnostics)

    def test_malformed_json_total(self):
        ws = parse_workspace("{::::")
        assert not ws.ok
        assert ws.diagnostics[0].line == 1

    def test_positions_multiline(self):
        text = '{\n  "algebras": {\n    "A": {"field": "F9000"}\n  }\n}'
        ws = parse_workspace(text)
        assert not ws.ok
        d = ws.diagnostics[0]
        assert d.line == 3

    def test_bad_matrix_entry(self):
        ws = parse_workspace(
            '{"algebras": {"kA2": {"field": "F2", "quiver": {"vertices": 2, '
            '"arrows": [{"name": "a", "src": 0, "dst": 1}]}, "relations": []}}, '
            '"modules": {"m": {"algebra": "kA2", "side": "left", '
            '"dims": {"0": 1, "1": 2}, "actions": {"a": [["1"]]}}}}'
        )
        assert not ws.ok  # shape mismatch: expected 1x2


def run_cli(argv, tmp_path=None, ws_text=None, capsys=None):
    args = []
    if ws_text is not None:
        path = tmp_path / "ws.json"
        path.write_text(ws_text)
        args += ["--workspace", str(path)]
    args += argv
    return cli.main(args)


class TestCommands:
    def test_check_conditions_exit_code(self, capsys):
        status = cli.main(["check-conditions", "kA2", "--ln", "2,2", "--ln", "1,2"])
        out = json.loads(capsys.readouterr().out)
        assert status == 1  # (1,2) fails
        assert out["report"]["ln_conditions"]["(2,2)"] == {"left": True, "right": True}
        assert out["report"]["dominant_dimension"] == 1

    def test_invariants(self, tmp_path, capsys):
        status = run_cli(["invariants", "S1@kA2"], tmp_path, WS)
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["grade"] == 1
        assert out["sgrade"] == 1
        assert out["torsion"] is True
        assert out["reflexive"] is False

    def test_resolve_injective(self, tmp_path, capsys):
        status = run_cli(["resolve", "S1", "--degree", "3", "--injective"], tmp_path, WS)
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["flavor"] == "injective"

    def test_certify_consistent(self, capsys):
        status = cli.main(["certify", "quasi-abelian", "kA2", "--dim-budget", "3"])
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["result"]["status"] == "consistent"

    def test_refl_hull(self, tmp_path, capsys):
        status = run_cli(["refl", "hull", "P1"], tmp_path, WS)
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["is_isomorphism"] is True

    def test_refl_kernel_via_hom_coeffs(self, tmp_path, capsys):
        status = run_cli(
            ["refl", "kernel", "P1", "P1", "--hom", "1"], tmp_path, WS
        )
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["total_dim"] == 0

    def test_serre_rejects_low_sgrade(self, capsys):
        status = cli.main(["serre", "kA2", "--simples", "0"])
        out = json.loads(capsys.readouterr().out)
        assert status == 3
        assert "strong grade" in out["error"]

    def test_unknown_algebra(self, capsys):
        status = cli.main(["check-conditions", "nonexistent"])
        assert status == 3

    def test_workspace_jobs(self, tmp_path, capsys):
        status = run_cli(["run"], tmp_path, WS)
        out = json.loads(capsys.readouterr().out)
        assert status == 1  # the (1,2) check fails
        assert len(out["jobs"]) == 2

    def test_morita_end(self, tmp_path, capsys):
        ws = """
        {
          "algebras": {"kx2": {"field": "F2",
              "quiver": {"vertices": 1, "arrows": [{"name": "x", "src": 0, "dst": 0}]},
              "relations": [["x", "x"]]}},
          "modules": {
            "A": {"algebra": "kx2", "side": "left", "dims": {"0": 2},
                  "actions": {"x": [["0", "0"], ["1", "0"]]}},
            "k": {"algebra": "kx2", "side": "left", "dims": {"0": 1}, "actions": {}}
          }
        }
        """
        status = run_cli(["morita", "end", "A", "k"], tmp_path, ws)
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["dimension"] == 5

    def test_invalid_workspace_blocks_commands(self, tmp_path, capsys):
        status = run_cli(["invariants", "S1"], tmp_path, "{broken")
        assert status == 3

    def test_output_is_deterministic(self, capsys):
        cli.main(["check-conditions", "kA2", "--ln", "2,2"])
        first = capsys.readouterr().out
        cli.main(["check-conditions", "kA2", "--ln", "2,2"])
        second = capsys.readouterr().out
        assert first == second
