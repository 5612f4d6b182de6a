#!/usr/bin/env python3
"""
Unit tests for schema parsing, schema validation and canonical schemas
"""
import pytest

from ultratree.cardinality import OMEGA, Cardinality
from ultratree.errors import SchemaError, SchemaSyntaxError
from ultratree.lazygen import (
    ChainLength,
    ChildSpec,
    LabelRule,
    LengthMode,
    NodeType,
    Scope,
    TreeSchema,
    canonical_ray,
    canonical_star,
    fig1_comb,
    fig2_star_of_paths,
    load_schema,
    parse_schema,
    write_schema,
)

HEADER = "schema s\nroot A 1\ntype A\n"


class TestParseSchema:
    """Well-formed schema text"""

    def test_fixture_matches_constructor(self, fixtures_dir, star_of_paths, ray_affine):
        assert load_schema(fixtures_dir / "star_of_paths.schema") == star_of_paths
        assert load_schema(fixtures_dir / "ray_affine.schema") == ray_affine

    def test_scope_defaults_to_depth(self):
        s = parse_schema(HEADER + "  child A count 1 rule recip\n")
        (spec,) = s.node_type("A").children
        assert spec.rule == LabelRule.recip(Scope.DEPTH)
        assert spec.length == ChainLength()

    def test_rationals_and_trailing_comments(self):
        s = parse_schema(HEADER + "  child B count 2 rule geom 1/2 3 scope sibling # two\ntype B\n")
        (spec,) = s.node_type("A").children
        assert spec.rule == LabelRule.geom(0.5, 3, Scope.SIBLING)
        assert spec.count == Cardinality.finite(2)

    def test_type_order_is_kept(self):
        s = parse_schema("schema s\nroot B 2\ntype B\n  child A count omega rule affine 1 1 "
                         "scope sibling\ntype A\n")
        assert s.type_names == ("B", "A")
        assert s.root_type == "B"

    @pytest.mark.parametrize("factory", [fig1_comb, fig2_star_of_paths],
                             ids=["comb", "star_of_paths"])
    def test_written_text_parses_back(self, factory):
        s = factory()
        assert parse_schema(write_schema(s)) == s

    def test_written_text(self, star_of_paths):
        assert write_schema(star_of_paths) == (
            "schema star_of_paths\n"
            "root Center 1\n"
            "type Center\n"
            "  child Arm count omega rule affine 1 1 scope sibling length sibling\n"
            "type Arm\n"
        )
        assert "inherit scope" not in write_schema(fig1_comb())


class TestSyntaxErrors:
    """Malformed text is rejected with the offending line"""

    @pytest.mark.parametrize("text,line,fragment", [
        ("root A 1\n", 1, "first directive"),
        ("schema s\nroot A\n", 2, "root <Type> <label>"),
        ("schema s\nroot A 1\nchild A count 1 rule recip\n", 3, "outside a type block"),
        (HEADER + "  child A count many rule recip\n", 4, "bad count"),
        (HEADER + "  child A count 1 rule sqrt\n", 4, "unknown rule"),
        (HEADER + "  child A count 1 rule affine 1\n", 4, "takes 2 parameter"),
        (HEADER + "  child A count 1 rule const -1\n", 4, "c >= 0"),
        (HEADER + "  child A count 1 rule recip scope width\n", 4, "unknown scope"),
        (HEADER + "  child A rule recip\n", 4, "missing 'count'"),
        (HEADER + "  child A count 1\n", 4, "missing 'rule'"),
        (HEADER + "  child A count 1 count 2 rule recip\n", 4, "given twice"),
        (HEADER + "  child A count 1 rule inherit scope sibling\n", 4, "inherit takes no scope"),
        (HEADER + "  child A count 1 rule recip length 0\n", 4, "chain length"),
        (HEADER + "type A\n", 4, "declared twice"),
        (HEADER + "leaf B\n", 4, "unknown directive"),
    ])
    def test_errors(self, text, line, fragment):
        with pytest.raises(SchemaSyntaxError) as exc:
            parse_schema(text)
        assert exc.value.line == line
        assert fragment in str(exc.value)

    def test_missing_root(self):
        with pytest.raises(SchemaSyntaxError, match="missing 'root"):
            parse_schema("schema s\ntype A\n")


class TestSchemaInvariants:
    """Parsed but invalid schemas"""

    @pytest.mark.parametrize("body,fragment", [
        ("  child B count 1 rule recip\n", "undeclared type B"),
        ("  child A count uncountable rule recip scope sibling\n", "requires rule const"),
        ("  child A count uncountable rule const 0 scope sibling\n", "requires rule const"),
        ("  child A count omega rule inherit\n", "inherit in A -> A requires a finite count"),
    ])
    def test_rejected(self, body, fragment):
        with pytest.raises(SchemaError, match=fragment):
            parse_schema(HEADER + body)

    def test_zero_center_with_zero_leaves(self):
        text = ("schema s\nroot Center 0\ntype Center\n"
                "  child Leaf count omega rule const 0 scope sibling\ntype Leaf\n")
        with pytest.raises(SchemaError, match="degenerate rule pair in Center -> Leaf"):
            parse_schema(text)

    def test_zero_chain(self):
        text = HEADER + "  child B count 1 rule geom 0 2 length 2\ntype B\n"
        with pytest.raises(SchemaError, match="degenerate chain"):
            parse_schema(text)

    def test_inherited_zero_propagates(self):
        text = ("schema s\nroot A 1\ntype A\n  child B count 1 rule const 0\n"
                "type B\n  child C count 1 rule inherit\ntype C\n  child D count 1 rule inherit\n"
                "type D\n")
        with pytest.raises(SchemaError, match="B -> C"):
            parse_schema(text)

    def test_zero_leaves_under_positive_center(self):
        s = parse_schema("schema s\nroot Center 1\ntype Center\n"
                         "  child Leaf count omega rule const 0 scope sibling\ntype Leaf\n")
        assert s.may_be_zero() == {"Leaf"}

    def test_unreachable_types_are_ignored(self):
        s = parse_schema(HEADER + "type Z\n  child Z count 1 rule const 0\n")
        assert s.reachable_types() == ("A",)
        assert s.may_be_zero() == set()


class TestCanonical:

    def test_ray(self):
        s = canonical_ray(LabelRule.recip())
        assert s.root_label == 1
        assert s.type_names == ("Spine",)
        with pytest.raises(SchemaError):
            canonical_ray(LabelRule.recip(Scope.SIBLING))
        with pytest.raises(SchemaError):
            canonical_ray(LabelRule.inherit())

    def test_star(self, fixtures_dir):
        s = canonical_star(Cardinality.finite(3), LabelRule.const(2, Scope.SIBLING), 0)
        assert s.types == load_schema(fixtures_dir / "finite_star.schema").types

    def test_comb_pendants(self, comb):
        pendant = comb.node_type("Spine").children[1]
        assert pendant.child_type == "Pendant"
        assert pendant.length == ChainLength(LengthMode.INDEX)

    def test_star_of_paths_arms(self, star_of_paths):
        (arms,) = star_of_paths.node_type("Center").children
        assert arms.count == OMEGA
        assert arms.rule.divergent

    def test_schema_is_hashable_value(self):
        a = TreeSchema("s", "A", 1, (NodeType("A", (ChildSpec("A", OMEGA, LabelRule.const(1)),)),))
        b = TreeSchema("s", "A", 1, [NodeType("A", (ChildSpec("A", OMEGA, LabelRule.const(1)),))])
        assert a == b
        assert hash(a) == hash(b)
