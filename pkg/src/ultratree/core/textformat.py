"""
Line-based text format for finite labeled trees

    # comment
    tree <name>
    vertex <id> <label>
    edge <id> <id>
"""
import math
from typing import Callable, Dict, Iterable, List, TextIO, Tuple, Union

from ultratree.core.tree import LabeledTree
from ultratree.errors import InvalidLabelError, TreeSyntaxError, UnknownVertexError


def format_number(x: float) -> str:
    """Shortest decimal that parses back to x; integral values without a fraction"""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x))


def parse_number(token: str) -> float:
    """Parse a nonnegative decimal as written in tree and schema files"""
    try:
        value = float(token)
    except ValueError:
        raise ValueError(f"not a decimal number: {token!r}") from None
    if math.isnan(value) or math.isinf(value):
        raise ValueError(f"not a finite number: {token!r}")
    return value


def _lines(text: Union[str, TextIO, Iterable[str]]) -> Iterable[Tuple[int, List[str]]]:
    if isinstance(text, str):
        text = text.splitlines()
    for number, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def parse_tree(text: Union[str, TextIO, Iterable[str]]) -> LabeledTree:
    """Parse and validate a tree; rejects cycles and disconnected input"""
    name = None
    labels: Dict[str, float] = {}
    edges: List[Tuple[str, str]] = []
    seen_edges = set()
    last_line = 0

    for number, tokens in _lines(text):
        last_line = number
        directive = tokens[0]
        if name is None:
            if directive != "tree" or len(tokens) != 2:
                raise TreeSyntaxError(number, "expected 'tree <name>' as the first directive")
            name = tokens[1]
            continue

        if directive == "vertex":
            if len(tokens) != 3:
                raise TreeSyntaxError(number, "expected 'vertex <id> <label>'")
            vertex, label_token = tokens[1], tokens[2]
            if vertex in labels:
                raise TreeSyntaxError(number, f"duplicate vertex {vertex}")
            if vertex.startswith("#"):
                raise TreeSyntaxError(number, f"vertex id may not start with '#': {vertex}")
            if edges:
                raise TreeSyntaxError(number, "vertex declarations must precede edges")
            try:
                label = parse_number(label_token)
            except ValueError as e:
                raise TreeSyntaxError(number, str(e)) from None
            if label < 0:
                raise TreeSyntaxError(number, f"label of {vertex} must be nonnegative")
            labels[vertex] = label
        elif directive == "edge":
            if len(tokens) != 3:
                raise TreeSyntaxError(number, "expected 'edge <id> <id>'")
            u, v = tokens[1], tokens[2]
            for endpoint in (u, v):
                if endpoint not in labels:
                    raise TreeSyntaxError(number, f"edge references undeclared vertex {endpoint}")
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise TreeSyntaxError(number, f"duplicate edge {u} {v}")
            seen_edges.add(key)
            edges.append((u, v))
        elif directive == "tree":
            raise TreeSyntaxError(number, "only one 'tree' directive is allowed")
        else:
            raise TreeSyntaxError(number, f"unknown directive {directive!r}")

    if name is None:
        raise TreeSyntaxError(max(last_line, 1), "empty input: expected 'tree <name>'")
    if not labels:
        raise TreeSyntaxError(last_line, "a tree needs at least one vertex")

    try:
        return LabeledTree(labels, edges, name=name)
    except (InvalidLabelError, UnknownVertexError) as e:
        raise TreeSyntaxError(last_line, str(e)) from None


def serialize_tree(t: LabeledTree) -> str:
    """Canonical text: vertices sorted, then edges sorted"""
    out = [f"tree {t.name}"]
    out.extend(f"vertex {v} {format_number(t.label(v))}" for v in t.vertices)
    out.extend(f"edge {u} {v}" for u, v in t.edges)
    return "\n".join(out) + "\n"


def read_utf8(path, error: Callable[[int, str], Exception]) -> str:
    """File contents as text; undecodable bytes raise `error` with their line"""
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise error(line, f"not valid UTF-8 (byte {e.start})") from None


def load_tree(path) -> LabeledTree:
    return parse_tree(read_utf8(path, TreeSyntaxError))
