"""
Label rules: the closed family of index-to-label sequences a schema may use

Every rule maps n = 1, 2, 3, ... to a nonnegative real and reports its asymptotic
attributes symbolically, so classifiers never have to scan the sequence.
"""
import math
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from ultratree.core.textformat import format_number

LARGEST_LABEL = sys.float_info.max
SMALLEST_LABEL = math.ulp(0.0)


class RuleKind(Enum):
    """Shape of a label rule"""
    CONST = "const"        # c
    AFFINE = "affine"      # a + b*n
    RECIP = "recip"        # 1/n
    POW = "pow"            # n**p
    GEOM = "geom"          # a * r**n
    INHERIT = "inherit"    # the parent's label


ARITY = {
    RuleKind.CONST: 1,
    RuleKind.AFFINE: 2,
    RuleKind.RECIP: 0,
    RuleKind.POW: 1,
    RuleKind.GEOM: 2,
    RuleKind.INHERIT: 0,
}


class Scope(Enum):
    """What the index n counts"""
    DEPTH = "depth"        # position on the root path, root = 1
    SIBLING = "sibling"    # order among the children of one spec, restarting per parent


class ZeroSetKind(Enum):
    EMPTY = "empty"
    FINITE = "finite"
    ALL = "all"


@dataclass(frozen=True)
class ZeroSet:
    """The indices n at which a rule evaluates to 0"""
    kind: ZeroSetKind
    members: Tuple[int, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.kind is ZeroSetKind.EMPTY


EMPTY_ZEROS = ZeroSet(ZeroSetKind.EMPTY)
ALL_ZEROS = ZeroSet(ZeroSetKind.ALL)


def parse_rational(token: str) -> float:
    """Decimal or p/q"""
    try:
        return float(Fraction(token))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {token!r}") from None


@dataclass(frozen=True)
class LabelRule:
    """A label sequence from the fixed family, with the scope of its index"""
    kind: RuleKind
    params: Tuple[float, ...] = ()
    scope: Scope = Scope.DEPTH

    def __post_init__(self):
        params = tuple(float(p) for p in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != ARITY[self.kind]:
            raise ValueError(f"{self.kind.value} takes {ARITY[self.kind]} parameter(s), "
                             f"got {len(params)}")
        if any(math.isnan(p) or math.isinf(p) for p in params):
            raise ValueError(f"{self.kind.value} parameters must be finite")
        if self.kind is RuleKind.CONST and params[0] < 0:
            raise ValueError("const c requires c >= 0")
        if self.kind is RuleKind.AFFINE and (params[0] < 0 or params[1] < 0):
            raise ValueError("affine a b requires a >= 0 and b >= 0")
        if self.kind is RuleKind.GEOM and (params[0] < 0 or params[1] < 0):
            raise ValueError("geom a r requires a >= 0 and r >= 0")

    # constructors

    @classmethod
    def const(cls, c: float, scope: Scope = Scope.DEPTH) -> "LabelRule":
        return cls(RuleKind.CONST, (c,), scope)

    @classmethod
    def affine(cls, a: float, b: float, scope: Scope = Scope.DEPTH) -> "LabelRule":
        return cls(RuleKind.AFFINE, (a, b), scope)

    @classmethod
    def recip(cls, scope: Scope = Scope.DEPTH) -> "LabelRule":
        return cls(RuleKind.RECIP, (), scope)

    @classmethod
    def pow(cls, p: float, scope: Scope = Scope.DEPTH) -> "LabelRule":
        return cls(RuleKind.POW, (p,), scope)

    @classmethod
    def geom(cls, a: float, r: float, scope: Scope = Scope.DEPTH) -> "LabelRule":
        return cls(RuleKind.GEOM, (a, r), scope)

    @classmethod
    def inherit(cls) -> "LabelRule":
        return cls(RuleKind.INHERIT, (), Scope.DEPTH)

    # evaluation

    def evaluate(self, n: int, parent_label: Optional[float] = None) -> float:
        """Label for index n >= 1"""
        if n < 1:
            raise ValueError(f"rule index starts at 1, got {n}")
        kind, p = self.kind, self.params
        try:
            if kind is RuleKind.CONST:
                value = p[0]
            elif kind is RuleKind.AFFINE:
                value = p[0] + p[1] * n
            elif kind is RuleKind.RECIP:
                value = 1.0 / n
            elif kind is RuleKind.POW:
                value = max(float(n) ** p[0], SMALLEST_LABEL)
            elif kind is RuleKind.GEOM:
                if p[0] == 0 or p[1] == 0:
                    value = 0.0
                else:
                    # positive terms saturate at the smallest float instead of underflowing to 0
                    value = max(p[0] * p[1] ** n, SMALLEST_LABEL)
            else:
                if parent_label is None:
                    raise ValueError("inherit needs the parent's label")
                value = parent_label
        except OverflowError:
            value = LARGEST_LABEL
        return min(value, LARGEST_LABEL)

    __call__ = evaluate

    # attributes

    def _constant_value(self) -> Optional[float]:
        """The value when the sequence is constant in n, else None"""
        kind, p = self.kind, self.params
        if kind is RuleKind.CONST:
            return p[0]
        if kind is RuleKind.AFFINE and p[1] == 0:
            return p[0]
        if kind is RuleKind.POW and p[0] == 0:
            return 1.0
        if kind is RuleKind.GEOM and (p[0] == 0 or p[1] == 0):
            return 0.0
        if kind is RuleKind.GEOM and p[1] == 1:
            return p[0]
        return None

    @property
    def is_constant(self) -> bool:
        return self.kind is RuleKind.INHERIT or self._constant_value() is not None

    @property
    def divergent(self) -> bool:
        """Only finitely many n have value <= eps, for every eps > 0"""
        kind, p = self.kind, self.params
        if kind is RuleKind.AFFINE:
            return p[1] > 0
        if kind is RuleKind.POW:
            return p[0] > 0
        if kind is RuleKind.GEOM:
            return p[0] > 0 and p[1] > 1
        return False

    @property
    def bounded(self) -> bool:
        """sup over n is finite; the family is bounded exactly when it is not divergent"""
        return not self.divergent

    @property
    def supremum(self) -> Optional[float]:
        """sup over n; None for inherit, whose values come from the parent"""
        if self.kind is RuleKind.INHERIT:
            return None
        if self.divergent:
            return math.inf
        constant = self._constant_value()
        if constant is not None:
            return constant
        # the remaining bounded rules decrease in n
        return self.evaluate(1)

    @property
    def infimum_limit(self) -> Optional[float]:
        """lim inf over n"""
        if self.kind is RuleKind.INHERIT:
            return None
        if self.divergent:
            return math.inf
        constant = self._constant_value()
        return constant if constant is not None else 0.0

    @property
    def zero_set(self) -> ZeroSet:
        if self.kind is RuleKind.INHERIT:
            raise ValueError("the zero-set of inherit is its parent's")
        return ALL_ZEROS if self._constant_value() == 0 else EMPTY_ZEROS

    def has_infinitely_many_at_most(self, eps: float) -> bool:
        """Whether {n : value(n) <= eps} is infinite"""
        if self.kind is RuleKind.INHERIT:
            raise ValueError("inherit has no index sequence of its own")
        if self.divergent:
            return False
        constant = self._constant_value()
        if constant is not None:
            return constant <= eps
        return eps > 0

    # rendering

    def render(self) -> str:
        """DSL form without scope, e.g. 'affine 0 1'"""
        return " ".join([self.kind.value] + [format_number(p) for p in self.params])

    def __str__(self) -> str:
        return self.render()
