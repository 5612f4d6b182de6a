"""
Verdicts and witnesses produced by the classifiers
"""
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from ultratree.cardinality import Cardinality
from ultratree.lazygen.rules import LabelRule


@dataclass(frozen=True)
class LocallyFiniteOnRay:
    """Every ray pumped through the cycle has unbounded labels"""
    rules: Tuple[LabelRule, ...]


@dataclass(frozen=True)
class BoundedRayWitness:
    """A reachable type cycle whose pumped ray has bounded labels

    ``bound`` is an upper bound on the limsup of labels along the ray; None when
    the cycle only copies labels forward.
    """
    cycle: Tuple[str, ...]
    rules: Tuple[LabelRule, ...]
    bound: Optional[float]


RayVerdict = Union[LocallyFiniteOnRay, BoundedRayWitness]


@dataclass(frozen=True)
class LocallyFiniteAtStar:
    type_name: str


@dataclass(frozen=True)
class InfiniteWEpsWitness:
    """A family of infinitely many children all labeled at most epsilon"""
    parent: str
    child: str
    index: int
    rule: LabelRule
    count: Cardinality
    epsilon: float


StarVerdict = Union[LocallyFiniteAtStar, InfiniteWEpsWitness]


@dataclass(frozen=True)
class UncountableFamily:
    """An uncountable family; W_epsilon contains all of it"""
    parent: str
    child: str
    index: int
    epsilon: float


@dataclass(frozen=True)
class StarCountability:
    parent: str
    child: str
    index: int
    count: Cardinality

    @property
    def countable(self) -> bool:
        return self.count.is_countable


@dataclass(frozen=True)
class SeparabilityVerdict:
    separable: bool
    witness: Optional[UncountableFamily] = None
    checks: Tuple[StarCountability, ...] = ()

    def __bool__(self) -> bool:
        return self.separable


@dataclass(frozen=True)
class LocalFinitenessVerdict:
    locally_finite: bool
    witness: Optional[Union[BoundedRayWitness, InfiniteWEpsWitness]] = None
    certificate: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.locally_finite


@dataclass(frozen=True)
class Hub:
    """A reachable spec with infinitely many children"""
    type_name: str
    child: str
    count: Cardinality


@dataclass(frozen=True)
class RayWitness:
    """A reachable type cycle; pumping it yields a ray"""
    cycle: Tuple[str, ...]


@dataclass(frozen=True)
class NeitherFinite:
    count: Cardinality


KonigWitness = Union[Hub, RayWitness, NeitherFinite]


@dataclass(frozen=True)
class ClassificationReport:
    name: str
    cardinality: Cardinality
    separable: SeparabilityVerdict
    locally_finite: LocalFinitenessVerdict

    def __post_init__(self):
        if self.separable.separable != self.cardinality.is_countable:
            raise ValueError("separability must agree with countability of the vertex set")
        if self.locally_finite.locally_finite and not self.separable.separable:
            raise ValueError("a locally finite space has a countable vertex set")
