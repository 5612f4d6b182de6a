"""
Ready-made schemas: rays, stars, the comb and the star of paths
"""
from ultratree.cardinality import OMEGA, Cardinality
from ultratree.errors import SchemaError
from ultratree.lazygen.rules import LabelRule, RuleKind, Scope
from ultratree.lazygen.schema import ChainLength, ChildSpec, LengthMode, NodeType, TreeSchema


def canonical_ray(rule: LabelRule) -> TreeSchema:
    """The ray v_1, v_2, ... with l(v_n) = rule(n)"""
    if rule.scope is not Scope.DEPTH or rule.kind is RuleKind.INHERIT:
        raise SchemaError("a ray needs a depth-scope rule from the sequence family")
    spine = NodeType("Spine", (ChildSpec("Spine", Cardinality.finite(1), rule),))
    return TreeSchema("ray", "Spine", rule.evaluate(1), (spine,))


def canonical_star(count: Cardinality, rule: LabelRule, center_label: float) -> TreeSchema:
    """A center with `count` leaves labeled by `rule`"""
    center = NodeType("Center", (ChildSpec("Leaf", count, rule),))
    return TreeSchema("star", "Center", center_label, (center, NodeType("Leaf")))


def fig1_comb() -> TreeSchema:
    """Ray labeled n with a pendant path of n vertices at v_n, pendants copying the spine label

    Locally finite with no vertex of infinite degree.
    """
    spine = NodeType("Spine", (
        ChildSpec("Spine", Cardinality.finite(1), LabelRule.affine(0, 1)),
        ChildSpec("Pendant", Cardinality.finite(1), LabelRule.inherit(),
                  ChainLength(LengthMode.INDEX)),
    ))
    return TreeSchema("comb", "Spine", 1, (spine, NodeType("Pendant")))


def fig2_star_of_paths() -> TreeSchema:
    """Center labeled 1 with countably many arms; arm n has n vertices labeled n + 1

    Rayless, locally finite, exactly one vertex of infinite degree.
    """
    center = NodeType("Center", (
        ChildSpec("Arm", OMEGA, LabelRule.affine(1, 1, Scope.SIBLING),
                  ChainLength(LengthMode.SIBLING)),
    ))
    return TreeSchema("star_of_paths", "Center", 1, (center, NodeType("Arm")))
