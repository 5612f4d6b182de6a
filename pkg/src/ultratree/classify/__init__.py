# Cardinality, separability and local finiteness of schema-generated spaces
from ultratree.classify.classifier import (
    admits_locally_finite_labeling,
    admits_separable_labeling,
    cardinality_of_vertex_set,
    classify,
    classify_locally_finite,
    classify_separable,
    classify_tree,
    find_ray_or_hub,
    star_countability_checks,
)
from ultratree.classify.criteria import is_ray_divergent, ray_criterion, star_criterion
from ultratree.classify.report import format_report, format_witness
from ultratree.classify.synthesis import OrdinalLabeling, ordinal_labels, synthesize_labeling
from ultratree.classify.typegraph import find_type_cycle, type_graph
from ultratree.classify.verdicts import (
    BoundedRayWitness,
    ClassificationReport,
    Hub,
    InfiniteWEpsWitness,
    KonigWitness,
    LocalFinitenessVerdict,
    LocallyFiniteAtStar,
    LocallyFiniteOnRay,
    NeitherFinite,
    RayWitness,
    SeparabilityVerdict,
    StarCountability,
    UncountableFamily,
)

__all__ = [
    "BoundedRayWitness",
    "ClassificationReport",
    "Hub",
    "InfiniteWEpsWitness",
    "KonigWitness",
    "LocalFinitenessVerdict",
    "LocallyFiniteAtStar",
    "LocallyFiniteOnRay",
    "NeitherFinite",
    "OrdinalLabeling",
    "RayWitness",
    "SeparabilityVerdict",
    "StarCountability",
    "UncountableFamily",
    "admits_locally_finite_labeling",
    "admits_separable_labeling",
    "cardinality_of_vertex_set",
    "classify",
    "classify_locally_finite",
    "classify_separable",
    "classify_tree",
    "find_ray_or_hub",
    "find_type_cycle",
    "format_report",
    "format_witness",
    "is_ray_divergent",
    "ordinal_labels",
    "ray_criterion",
    "star_countability_checks",
    "star_criterion",
    "synthesize_labeling",
    "type_graph",
]
