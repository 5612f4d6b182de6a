#!/usr/bin/env python3
"""
Unit tests for the command-line front end
"""
import pytest
from click.testing import CliRunner

from ultratree.cli import main


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(runner, fixtures_dir):
    """Run a subcommand with fixture file names resolved"""

    def run(*args):
        resolved = [str(fixtures_dir / a) if a.endswith((".tree", ".schema")) else a
                    for a in args]
        return runner.invoke(main, resolved)

    return run


class TestTreeCommands:
    """Commands over finite tree files"""

    def test_dist(self, invoke):
        result = invoke("dist", "--file", "path3.tree", "--from", "a", "--to", "c")
        assert result.exit_code == 0
        assert result.output == "d = 3\n"
        naive = invoke("dist", "--file", "path3.tree", "--from", "b", "--to", "c", "--naive")
        assert naive.output == "d = 2\n"

    def test_ball(self, invoke):
        result = invoke("ball", "--file", "star5.tree", "--center", "c", "--radius", "2")
        assert result.output == "ball: center c radius 2\nmembers: c l1 l2\n"

    def test_hull(self, invoke):
        result = invoke("hull", "--file", "star5.tree", "--vertices", "l1, l3")
        assert result.output == (
            "tree star5\nvertex c 1\nvertex l1 1\nvertex l3 3\nedge c l1\nedge c l3\n"
        )

    def test_partition_and_packing(self, invoke):
        result = invoke("partition", "--file", "star5.tree", "--epsilon", "2")
        assert result.output == "class 1: c l1 l2\nclass 2: l3\nclass 3: l4\n"
        subset = invoke("packing", "--file", "star5.tree", "--epsilon", "2", "--vertices", "l1,l3")
        assert subset.output == "packing = 2\n"

    def test_validate(self, invoke):
        assert invoke("validate", "--file", "path3.tree").output == "labeling: non-degenerate\n"
        degenerate = invoke("validate", "--file", "degenerate.tree")
        assert degenerate.exit_code == 0
        assert degenerate.output == "labeling: degenerate (edge a b)\n"

    def test_synth_labeling(self, invoke):
        result = invoke("synth-labeling", "--file", "path3.tree")
        assert result.output == (
            "tree path3\nvertex a 1\nvertex b 2\nvertex c 3\nedge a b\nedge b c\n"
        )

    def test_classify_tree(self, invoke):
        result = invoke("classify", "--file", "path3.tree")
        assert result.output == "cardinality: finite(3)\nseparable: yes\nlocally-finite: yes\n"


class TestSchemaCommands:
    """Commands over schema files"""

    def test_validate(self, invoke):
        assert invoke("validate", "--schema", "star_of_paths.schema").output == (
            "schema: ok (star_of_paths, 2 types)\n"
        )

    def test_classify_with_certificates(self, invoke):
        result = invoke("classify", "--schema", "star_uncountable.schema", "--certificates")
        assert result.exit_code == 0
        assert result.output == (
            "cardinality: uncountable\n"
            "separable: no (witness: uncountable family Center -> Leaf, epsilon 1)\n"
            "locally-finite: no (witness: infinite star Center -> Leaf, rule const 1, epsilon 1)\n"
            "certificate: family Center -> Leaf: uncountable, uncountable\n"
        )

    def test_witness(self, invoke):
        assert invoke("witness", "--schema", "finite_star.schema").output == "neither: finite(4)\n"
        assert invoke("witness", "--schema", "ray_affine.schema").output == "ray: cycle [Spine]\n"

    def test_explore(self, invoke):
        closed = invoke("explore", "--schema", "ray_affine.schema", "--radius", "3")
        assert closed.output == "ball: finite\nmembers: v1 v2 v3\n"
        opened = invoke("explore", "--schema", "ray_recip.schema", "--radius", "1",
                        "--budget-vertices", "50")
        assert opened.output == "ball: budget-exceeded (vertex budget)\nfrontier: v50\n"

    def test_explore_infinite_family(self, invoke):
        result = invoke("explore", "--schema", "star_uncountable.schema", "--radius", "1")
        assert result.output == "ball: budget-exceeded (infinite family)\nfrontier: v1\n"

    def test_instantiate(self, invoke):
        result = invoke("instantiate", "--schema", "ray_affine.schema", "--budget-vertices", "3")
        assert result.output == (
            "tree ray\nvertex v1 1\nvertex v2 2\nvertex v3 3\nedge v1 v2\nedge v2 v3\n"
            "# frontier: v3\n"
        )

    def test_instantiate_table(self, invoke):
        result = invoke("instantiate", "--schema", "star_of_paths.schema", "--budget-vertices", "4",
                        "--table")
        assert result.exit_code == 0
        assert "star_of_paths (4 vertices)" in result.output
        assert "Center" in result.output and "Arm" in result.output

    def test_synth_labeling_schema(self, invoke):
        result = invoke("synth-labeling", "--schema", "star_of_paths.schema", "--budget-vertices", "3")
        assert result.output == (
            "tree star_of_paths\nvertex v1 1\nvertex v2 2\nvertex v3 3\nedge v1 v2\nedge v1 v3\n"
        )

    def test_budget_from_config(self, invoke, tmp_path):
        config = tmp_path / "settings.yaml"
        config.write_text("budget:\n  vertices: 2\n")
        result = invoke("instantiate", "--schema", "ray_affine.schema", "--config", str(config))
        assert result.output.endswith("# frontier: v2\n")


class TestExitCodes:
    """0 on success, 1 on domain errors, 2 on usage errors"""

    def test_degenerate_partition(self, invoke):
        result = invoke("partition", "--file", "degenerate.tree", "--epsilon", "1")
        assert result.exit_code == 1
        assert "error: ball partition requires a non-degenerate labeling" in result.output

    def test_unknown_vertex(self, invoke):
        result = invoke("dist", "--file", "path3.tree", "--from", "a", "--to", "z")
        assert result.exit_code == 1
        assert "unknown vertex: z" in result.output

    def test_uncountable_synthesis(self, invoke):
        assert invoke("synth-labeling", "--schema", "star_uncountable.schema").exit_code == 1

    def test_syntax_error(self, invoke, tmp_path):
        bad = tmp_path / "bad.tree"
        bad.write_text("tree t\nvertex a one\n")
        result = invoke("dist", "--file", str(bad), "--from", "a", "--to", "a")
        assert result.exit_code == 1
        assert "line 2" in result.output

    @pytest.mark.parametrize("args", [
        ("ball", "--file", "path3.tree", "--center", "a", "--radius", "-1"),
        ("partition", "--file", "path3.tree", "--epsilon", "0"),
        ("classify", "--file", "path3.tree", "--schema", "star_of_paths.schema"),
        ("classify",),
        ("dist", "--file", "missing.tree", "--from", "a", "--to", "b"),
        ("explore", "--schema", "star_of_paths.schema", "--radius", "1", "--budget-vertices", "0"),
        ("nosuch",),
    ])
    def test_usage_errors(self, invoke, args):
        assert invoke(*args).exit_code == 2

    def test_bad_config(self, invoke, tmp_path):
        config = tmp_path / "settings.yaml"
        config.write_text("budget:\n  vertices: -3\n")
        result = invoke("witness", "--schema", "star_of_paths.schema", "--config", str(config))
        assert result.exit_code == 2
