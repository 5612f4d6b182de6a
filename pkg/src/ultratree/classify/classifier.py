"""
Schema-level verdicts: vertex cardinality, separability, local finiteness and
the ray-or-hub dichotomy for infinite trees
"""
import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from ultratree.cardinality import OMEGA, UNCOUNTABLE, Cardinality
from ultratree.classify.criteria import is_ray_divergent, ray_criterion, star_criterion
from ultratree.classify.typegraph import find_type_cycle, min_positions, reachable_types, type_graph
from ultratree.classify.verdicts import (
    BoundedRayWitness,
    ClassificationReport,
    Hub,
    InfiniteWEpsWitness,
    KonigWitness,
    LocalFinitenessVerdict,
    NeitherFinite,
    RayWitness,
    SeparabilityVerdict,
    StarCountability,
    UncountableFamily,
)
from ultratree.core.tree import LabeledTree
from ultratree.lazygen.schema import LengthMode, TreeSchema
from ultratree.metric.distance import require_non_degenerate

logger = logging.getLogger(__name__)


def _interpolate(samples: List[int], m: int) -> int:
    """Value at m of the polynomial taking samples[x] at x = 0, 1, ..., d"""
    if m < len(samples):
        return samples[m]
    total = Fraction(0)
    for i, y in enumerate(samples):
        term = Fraction(y)
        for j in range(len(samples)):
            if j != i:
                term *= Fraction(m - j, i - j)
        total += term
    return int(total)


def _exact_count(schema: TreeSchema) -> int:
    """Vertex count of a schema whose reachable type graph is finite and acyclic

    count(T, p), the size of the subtree under a T vertex at position p, is a
    polynomial in p whose degree is the number of index-length specs below T. Sums
    of it over long chains and sibling runs are read off interpolated prefix sums.
    """
    degrees: Dict[str, int] = {}
    counts: Dict[Tuple[str, int], int] = {}
    sums: Dict[Tuple[str, int], List[int]] = {}

    def degree(type_name: str) -> int:
        if type_name not in degrees:
            degrees[type_name] = max(
                [degree(spec.child_type) + (spec.length.mode is LengthMode.INDEX)
                 for spec in schema.node_type(type_name).children if spec.count.n],
                default=0)
        return degrees[type_name]

    def prefix(type_name: str, m: int, order: int = 1) -> int:
        """sum of count(type, x) for x = 1..m, iterated `order` times"""
        key = (type_name, order)
        if key not in sums:
            samples, running = [0], 0
            for x in range(1, degree(type_name) + order + 1):
                running += count(type_name, x) if order == 1 else prefix(type_name, x, order - 1)
                samples.append(running)
            sums[key] = samples
        return _interpolate(sums[key], m)

    def count(type_name: str, position: int) -> int:
        key = (type_name, position)
        if key not in counts:
            total = 1
            for spec in schema.node_type(type_name).children:
                n, child = spec.count.n, spec.child_type
                if not n:
                    continue
                before = prefix(child, position)
                if spec.length.mode is LengthMode.SIBLING:
                    # chains of lengths 1..n
                    total += prefix(child, position + n, 2) - prefix(child, position, 2) - n * before
                else:
                    length = spec.length.resolve(position, 1)
                    total += n * (prefix(child, position + length) - before)
            counts[key] = total
        return counts[key]

    return count(schema.root_type, 1)


def cardinality_of_vertex_set(s: TreeSchema) -> Cardinality:
    refs = s.reachable_specs()
    if any(ref.spec.count == UNCOUNTABLE for ref in refs):
        return UNCOUNTABLE
    if any(ref.spec.is_infinite for ref in refs) or find_type_cycle(s) is not None:
        return OMEGA
    return Cardinality.finite(_exact_count(s))


def star_countability_checks(s: TreeSchema) -> List[StarCountability]:
    """One countability check per reachable family"""
    return [StarCountability(ref.parent, ref.child, ref.index, ref.spec.count)
            for ref in s.reachable_specs()]


def classify_separable(s: TreeSchema) -> SeparabilityVerdict:
    """Separable iff the vertex set is countable iff every family is countable"""
    checks = tuple(star_countability_checks(s))
    for check in checks:
        if not check.countable:
            rule = s.node_type(check.parent).children[check.index].rule
            witness = UncountableFamily(check.parent, check.child, check.index, rule.params[0])
            return SeparabilityVerdict(False, witness, checks)
    return SeparabilityVerdict(True, None, checks)


def classify_locally_finite(s: TreeSchema) -> LocalFinitenessVerdict:
    """Locally finite iff every star and every ray inside the tree is

    Stars are checked per reachable type in declaration order, then the reachable
    type cycles avoiding depth-divergent rules are searched.
    """
    g = type_graph(s)
    positions = min_positions(s, g)
    certificate: List[str] = []
    for type_name in reachable_types(s, g):
        verdict = star_criterion(s, type_name, positions)
        if isinstance(verdict, InfiniteWEpsWitness):
            return LocalFinitenessVerdict(False, verdict, tuple(certificate))
        families = [ref for ref in s.specs(type_name) if ref.spec.is_infinite]
        if families:
            for ref in families:
                certificate.append(f"star {type_name} -> {ref.child}: divergent sibling rule "
                                   f"{ref.spec.rule.render()}")
        else:
            certificate.append(f"star {type_name}: finite counts")

    cycle = find_type_cycle(s, keep=lambda spec: not is_ray_divergent(spec.rule))
    if cycle is not None:
        verdict = ray_criterion([ref.spec.rule for ref in cycle], [ref.parent for ref in cycle])
        if isinstance(verdict, BoundedRayWitness):
            return LocalFinitenessVerdict(False, verdict, tuple(certificate))

    if find_type_cycle(s) is None:
        certificate.append("rays: no reachable type cycle")
    else:
        certificate.append("rays: every reachable type cycle crosses a depth-divergent rule")
    return LocalFinitenessVerdict(True, None, tuple(certificate))


def find_ray_or_hub(s: TreeSchema) -> KonigWitness:
    for ref in s.reachable_specs():
        if ref.spec.is_infinite:
            return Hub(ref.parent, ref.child, ref.spec.count)
    cycle = find_type_cycle(s)
    if cycle is not None:
        return RayWitness(tuple(ref.parent for ref in cycle))
    return NeitherFinite(Cardinality.finite(_exact_count(s)))


def admits_locally_finite_labeling(s: TreeSchema) -> bool:
    """Some labeling of the underlying tree is locally finite iff it is countable"""
    return cardinality_of_vertex_set(s).is_countable


def admits_separable_labeling(s: TreeSchema) -> bool:
    """Separable, locally finite and countable coincide for the existence of a labeling"""
    return admits_locally_finite_labeling(s)


def classify(s: TreeSchema) -> ClassificationReport:
    cardinality = cardinality_of_vertex_set(s)
    report = ClassificationReport(s.name, cardinality, classify_separable(s),
                                  classify_locally_finite(s))
    logger.info(f"Classified {s.name}: cardinality {cardinality}, "
                f"separable {report.separable.separable}, "
                f"locally finite {report.locally_finite.locally_finite}")
    return report


def classify_tree(t: LabeledTree) -> ClassificationReport:
    """A finite tree with a non-degenerate labeling is separable and locally finite"""
    require_non_degenerate(t, "classify")
    return ClassificationReport(
        t.name,
        Cardinality.finite(t.size),
        SeparabilityVerdict(True),
        LocalFinitenessVerdict(True, certificate=("finite tree: every bounded set is finite",)),
    )
