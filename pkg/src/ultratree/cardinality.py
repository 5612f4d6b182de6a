"""
Symbolic cardinalities: Finite(n) < CountablyInfinite < Uncountable
"""
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterable, Optional


class CardinalityKind(Enum):
    """Rank of a cardinality in the total order"""
    FINITE = 0
    COUNTABLY_INFINITE = 1
    UNCOUNTABLE = 2


@total_ordering
@dataclass(frozen=True)
class Cardinality:
    """A cardinal number at the resolution the classifier needs"""
    kind: CardinalityKind
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind is CardinalityKind.FINITE:
            if self.n is None or self.n < 0:
                raise ValueError(f"finite cardinality needs n >= 0, got {self.n}")
        elif self.n is not None:
            raise ValueError("only finite cardinalities carry a count")

    @classmethod
    def finite(cls, n: int) -> "Cardinality":
        return cls(CardinalityKind.FINITE, int(n))

    @classmethod
    def parse(cls, text: str) -> "Cardinality":
        """Parse the count syntax of the schema format: <int> | omega | uncountable"""
        token = text.strip().lower()
        if token == "omega":
            return OMEGA
        if token == "uncountable":
            return UNCOUNTABLE
        if not token.isdigit():
            raise ValueError(f"bad count: {text!r}")
        return cls.finite(int(token))

    @property
    def is_finite(self) -> bool:
        return self.kind is CardinalityKind.FINITE

    @property
    def is_countable(self) -> bool:
        return self.kind is not CardinalityKind.UNCOUNTABLE

    def _key(self):
        return (self.kind.value, self.n if self.n is not None else 0)

    def __lt__(self, other: "Cardinality") -> bool:
        if not isinstance(other, Cardinality):
            return NotImplemented
        return self._key() < other._key()

    def join(self, other: "Cardinality") -> "Cardinality":
        """Lattice join: the larger of the two"""
        return max(self, other)

    def __add__(self, other: "Cardinality") -> "Cardinality":
        """Cardinality of a disjoint union"""
        if self.is_finite and other.is_finite:
            return Cardinality.finite(self.n + other.n)
        return self.join(other)

    def __mul__(self, other: "Cardinality") -> "Cardinality":
        """Cardinality of a cartesian product"""
        if self == ZERO or other == ZERO:
            return ZERO
        if self.is_finite and other.is_finite:
            return Cardinality.finite(self.n * other.n)
        return self.join(other)

    def __str__(self) -> str:
        if self.kind is CardinalityKind.FINITE:
            return f"finite({self.n})"
        if self.kind is CardinalityKind.COUNTABLY_INFINITE:
            return "omega"
        return "uncountable"

    def to_count_token(self) -> str:
        """Render in the schema count syntax"""
        return str(self.n) if self.is_finite else str(self)


ZERO = Cardinality.finite(0)
OMEGA = Cardinality(CardinalityKind.COUNTABLY_INFINITE)
UNCOUNTABLE = Cardinality(CardinalityKind.UNCOUNTABLE)


def countable_union(parts: Iterable[Cardinality], infinitely_many: bool = False) -> Cardinality:
    """Cardinality of a union of the given parts

    With ``infinitely_many`` the parts stand for a countably infinite family whose
    members are bounded by the listed representatives; a countable union of
    countable sets is countable, and infinitely many nonempty parts are infinite.
    """
    total = ZERO
    nonempty = False
    for part in parts:
        total = total + part
        nonempty = nonempty or part != ZERO
    if infinitely_many and nonempty:
        total = total.join(OMEGA)
    return total
