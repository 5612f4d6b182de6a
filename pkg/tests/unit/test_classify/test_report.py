#!/usr/bin/env python3
"""
Unit tests for report and witness rendering
"""
from ultratree.cardinality import OMEGA, Cardinality
from ultratree.classify import (
    Hub,
    NeitherFinite,
    RayWitness,
    classify,
    classify_tree,
    format_report,
    format_witness,
)
from ultratree.lazygen import LabelRule, Scope, canonical_star, load_schema, parse_schema


class TestFormatReport:

    def test_recip_ray_matches_golden(self, ray_recip, golden_dir):
        expected = (golden_dir / "classify_ray_recip.txt").read_text()
        assert format_report(classify(ray_recip)) == expected

    def test_star_of_paths_with_certificates(self, star_of_paths):
        assert format_report(classify(star_of_paths), certificates=True) == (
            "cardinality: omega\n"
            "separable: yes\n"
            "locally-finite: yes\n"
            "certificate: family Center -> Arm: omega, countable\n"
            "certificate: star Center -> Arm: divergent sibling rule affine 1 1\n"
            "certificate: star Arm: finite counts\n"
            "certificate: rays: no reachable type cycle\n"
        )

    def test_uncountable_star(self, fixtures_dir):
        report = classify(load_schema(fixtures_dir / "star_uncountable.schema"))
        assert format_report(report) == (
            "cardinality: uncountable\n"
            "separable: no (witness: uncountable family Center -> Leaf, epsilon 1)\n"
            "locally-finite: no (witness: infinite star Center -> Leaf, rule const 1, epsilon 1)\n"
        )

    def test_infinite_star_epsilon(self):
        report = classify(canonical_star(OMEGA, LabelRule.geom(3, 0.5, Scope.SIBLING), 1))
        assert format_report(report).splitlines()[2] == (
            "locally-finite: no (witness: infinite star Center -> Leaf, rule geom 3 0.5, epsilon 1.5)"
        )

    def test_cycle_with_two_rules(self):
        s = parse_schema("schema s\nroot A 1\ntype A\n  child B count 1 rule recip scope sibling\n"
                         "type B\n  child A count 1 rule const 2\n")
        assert format_report(classify(s)).splitlines()[2] == (
            "locally-finite: no (witness: bounded cycle [A, B], rules recip, const 2)"
        )

    def test_finite_tree(self, path3):
        assert format_report(classify_tree(path3), certificates=True) == (
            "cardinality: finite(3)\n"
            "separable: yes\n"
            "locally-finite: yes\n"
            "certificate: finite tree: every bounded set is finite\n"
        )


class TestFormatWitness:

    def test_witness_lines(self, golden_dir):
        assert format_witness(Hub("Center", "Arm", OMEGA)) == (golden_dir / "witness_star_of_paths.txt").read_text()
        assert format_witness(RayWitness(("A", "B"))) == "ray: cycle [A, B]\n"
        assert format_witness(NeitherFinite(Cardinality.finite(4))) == "neither: finite(4)\n"
