"""
Line-based schema format

    # comment
    schema <name>
    root <Type> <label>
    type <Type>
      child <Type> count <int|omega|uncountable> rule <RULE> scope <depth|sibling> [length <k|index|sibling>]

RULE is one of ``const c``, ``affine a b``, ``recip``, ``pow p``, ``geom a r`` or
``inherit``; parameters are decimals or p/q rationals. ``scope`` defaults to depth.
"""
import logging
from typing import Dict, Iterable, List, Optional, TextIO, Tuple, Union

from ultratree.cardinality import Cardinality
from ultratree.core.textformat import format_number, parse_number, read_utf8
from ultratree.errors import SchemaSyntaxError
from ultratree.lazygen.rules import ARITY, LabelRule, RuleKind, Scope, parse_rational
from ultratree.lazygen.schema import SINGLE, ChainLength, ChildSpec, NodeType, TreeSchema

logger = logging.getLogger(__name__)

_RULE_KINDS = {kind.value: kind for kind in RuleKind}


def _lines(text: Union[str, TextIO, Iterable[str]]) -> Iterable[Tuple[int, List[str]]]:
    if isinstance(text, str):
        text = text.splitlines()
    for number, raw in enumerate(text, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _parse_child(number: int, tokens: List[str]) -> ChildSpec:
    if len(tokens) < 2:
        raise SchemaSyntaxError(number, "expected 'child <Type> count <c> rule <RULE> ...'")
    child_type = tokens[1]
    count: Optional[Cardinality] = None
    rule_kind: Optional[RuleKind] = None
    params: Tuple[float, ...] = ()
    scope = Scope.DEPTH
    length = SINGLE
    seen = set()

    i = 2
    while i < len(tokens):
        key = tokens[i]
        if key in seen:
            raise SchemaSyntaxError(number, f"'{key}' given twice")
        seen.add(key)
        if i + 1 >= len(tokens):
            raise SchemaSyntaxError(number, f"'{key}' needs a value")
        value = tokens[i + 1]
        try:
            if key == "count":
                count = Cardinality.parse(value)
                i += 2
            elif key == "rule":
                if value not in _RULE_KINDS:
                    raise SchemaSyntaxError(number, f"unknown rule {value!r}")
                rule_kind = _RULE_KINDS[value]
                arity = ARITY[rule_kind]
                raw = tokens[i + 2:i + 2 + arity]
                if len(raw) != arity:
                    raise SchemaSyntaxError(number, f"rule {value} takes {arity} parameter(s)")
                params = tuple(parse_rational(p) for p in raw)
                i += 2 + arity
            elif key == "scope":
                if value not in ("depth", "sibling"):
                    raise SchemaSyntaxError(number, f"unknown scope {value!r}")
                scope = Scope(value)
                i += 2
            elif key == "length":
                length = ChainLength.parse(value)
                i += 2
            else:
                raise SchemaSyntaxError(number, f"unexpected token {key!r}")
        except SchemaSyntaxError:
            raise
        except ValueError as e:
            raise SchemaSyntaxError(number, str(e)) from None

    if count is None:
        raise SchemaSyntaxError(number, "child spec is missing 'count'")
    if rule_kind is None:
        raise SchemaSyntaxError(number, "child spec is missing 'rule'")
    if rule_kind is RuleKind.INHERIT and scope is not Scope.DEPTH:
        raise SchemaSyntaxError(number, "inherit takes no scope")

    try:
        rule = LabelRule(rule_kind, params, scope)
    except ValueError as e:
        raise SchemaSyntaxError(number, str(e)) from None
    return ChildSpec(child_type, count, rule, length)


def parse_schema(text: Union[str, TextIO, Iterable[str]]) -> TreeSchema:
    """Parse and validate a schema

    Raises SchemaSyntaxError for malformed text and SchemaError for a
    well-formed schema that violates a schema invariant.
    """
    name: Optional[str] = None
    root: Optional[Tuple[str, float]] = None
    blocks: Dict[str, List[ChildSpec]] = {}
    current: Optional[str] = None
    last_line = 0

    for number, tokens in _lines(text):
        last_line = number
        directive = tokens[0]
        if name is None:
            if directive != "schema" or len(tokens) != 2:
                raise SchemaSyntaxError(number, "expected 'schema <name>' as the first directive")
            name = tokens[1]
        elif directive == "root":
            if root is not None:
                raise SchemaSyntaxError(number, "only one 'root' directive is allowed")
            if len(tokens) != 3:
                raise SchemaSyntaxError(number, "expected 'root <Type> <label>'")
            try:
                root = (tokens[1], parse_number(tokens[2]))
            except ValueError as e:
                raise SchemaSyntaxError(number, str(e)) from None
        elif directive == "type":
            if len(tokens) != 2:
                raise SchemaSyntaxError(number, "expected 'type <Type>'")
            if tokens[1] in blocks:
                raise SchemaSyntaxError(number, f"type {tokens[1]} declared twice")
            current = tokens[1]
            blocks[current] = []
        elif directive == "child":
            if current is None:
                raise SchemaSyntaxError(number, "'child' outside a type block")
            blocks[current].append(_parse_child(number, tokens))
        elif directive == "schema":
            raise SchemaSyntaxError(number, "only one 'schema' directive is allowed")
        else:
            raise SchemaSyntaxError(number, f"unknown directive {directive!r}")

    if name is None:
        raise SchemaSyntaxError(max(last_line, 1), "empty input: expected 'schema <name>'")
    if root is None:
        raise SchemaSyntaxError(last_line, "missing 'root <Type> <label>'")
    if not blocks:
        raise SchemaSyntaxError(last_line, "a schema needs at least one type block")

    types = tuple(NodeType(type_name, tuple(specs)) for type_name, specs in blocks.items())
    schema = TreeSchema(name, root[0], root[1], types)
    logger.info(f"Parsed schema {name}: {len(types)} types, root {root[0]}")
    return schema


def write_schema(schema: TreeSchema) -> str:
    """Canonical text accepted by parse_schema"""
    out = [f"schema {schema.name}",
           f"root {schema.root_type} {format_number(schema.root_label)}"]
    for node_type in schema.types:
        out.append(f"type {node_type.name}")
        for spec in node_type.children:
            line = (f"  child {spec.child_type} count {spec.count.to_count_token()} "
                    f"rule {spec.rule.render()}")
            if spec.rule.kind is not RuleKind.INHERIT:
                line += f" scope {spec.rule.scope.value}"
            if spec.length != SINGLE:
                line += f" length {spec.length.render()}"
            out.append(line)
    return "\n".join(out) + "\n"


def load_schema(path) -> TreeSchema:
    return parse_schema(read_utf8(path, SchemaSyntaxError))
