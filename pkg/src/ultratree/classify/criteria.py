"""
Local-finiteness criteria for the two building blocks of a tree: rays and stars

A ray is locally finite iff its labels are unbounded along every tail; a star is
locally finite iff W_eps meets its leaves in a finite set for every eps > 0.
"""
import logging
from typing import Dict, Optional, Sequence

from ultratree.cardinality import OMEGA
from ultratree.classify.typegraph import min_positions
from ultratree.classify.verdicts import (
    BoundedRayWitness,
    InfiniteWEpsWitness,
    LocallyFiniteAtStar,
    LocallyFiniteOnRay,
    RayVerdict,
    StarVerdict,
)
from ultratree.lazygen.rules import LabelRule, RuleKind, Scope
from ultratree.lazygen.schema import TreeSchema

logger = logging.getLogger(__name__)


def is_ray_divergent(rule: LabelRule) -> bool:
    """Labels along a pumped ray grow without bound

    A sibling-scope rule re-enters at index 1 on every pass, so only depth-scope
    rules can diverge along a ray.
    """
    return rule.scope is Scope.DEPTH and rule.divergent


def _ray_bound(rule: LabelRule) -> Optional[float]:
    if rule.kind is RuleKind.INHERIT:
        return None
    if rule.scope is Scope.SIBLING:
        return rule.evaluate(1)
    return rule.supremum


def ray_criterion(rules: Sequence[LabelRule], cycle: Sequence[str] = ()) -> RayVerdict:
    if not rules:
        raise ValueError("ray_criterion needs the rules of a nonempty cycle")
    rules = tuple(rules)
    if any(is_ray_divergent(rule) for rule in rules):
        return LocallyFiniteOnRay(rules)
    bounds = [b for b in map(_ray_bound, rules) if b is not None]
    return BoundedRayWitness(tuple(cycle), rules, max(bounds) if bounds else None)


def _witness_epsilon(rule: LabelRule, child_position: int) -> float:
    """Smallest readable eps at which the family lies inside W_eps"""
    if rule.divergent:
        # depth-scope: every sibling carries the same label
        eps = rule.evaluate(child_position)
    else:
        eps = rule.supremum
    return eps if eps > 0 else 1.0


def star_criterion(schema: TreeSchema, type_name: str,
                   positions: Optional[Dict[str, int]] = None) -> StarVerdict:
    """Check every infinite family below vertices of type_name, in declaration order"""
    positions = min_positions(schema) if positions is None else positions
    for ref in schema.specs(type_name):
        spec = ref.spec
        if spec.count.is_finite:
            continue
        rule = spec.rule
        if spec.count == OMEGA and rule.scope is Scope.SIBLING and rule.divergent:
            continue
        child_position = positions.get(type_name, 1) + 1
        witness = InfiniteWEpsWitness(type_name, ref.child, ref.index, rule, spec.count,
                                      _witness_epsilon(rule, child_position))
        logger.debug(f"Star at {type_name} fails: {ref.child} count {spec.count}, eps {witness.epsilon}")
        return witness
    return LocallyFiniteAtStar(type_name)
