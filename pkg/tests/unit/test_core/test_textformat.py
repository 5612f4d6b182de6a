#!/usr/bin/env python3
"""
Unit tests for the tree text format and number formatting
"""
import pytest

from ultratree.core.textformat import (
    format_number,
    load_tree,
    parse_number,
    parse_tree,
    serialize_tree,
)
from ultratree.errors import NotATreeError, TreeSyntaxError


class TestFormatNumber:
    """Shortest round-trip rendering"""

    @pytest.mark.parametrize("value,text", [
        (3.0, "3"),
        (0.0, "0"),
        (0.5, "0.5"),
        (1 / 3, "0.3333333333333333"),
        (1e20, "1e+20"),
        (float("inf"), "inf"),
    ])
    def test_rendering(self, value, text):
        assert format_number(value) == text

    def test_parse_number_rejects_words(self):
        with pytest.raises(ValueError):
            parse_number("three")
        with pytest.raises(ValueError):
            parse_number("inf")


class TestParseTree:
    """Parsing and validation of tree files"""

    def test_comments_and_blank_lines(self):
        text = "# header\n\ntree t\nvertex a 1  \n# middle\nvertex b 0.5\nedge a b\n"
        t = parse_tree(text)
        assert t.name == "t"
        assert t.labels == {"a": 1.0, "b": 0.5}
        assert t.edges == (("a", "b"),)

    def test_fixture_file(self, fixtures_dir, path3):
        assert load_tree(fixtures_dir / "path3.tree") == path3

    def test_serialize_is_canonical(self, path3):
        assert serialize_tree(path3) == (
            "tree path3\nvertex a 3\nvertex b 1\nvertex c 2\nedge a b\nedge b c\n"
        )
        assert parse_tree(serialize_tree(path3)) == path3

    @pytest.mark.parametrize("text,line,fragment", [
        ("vertex a 1\n", 1, "first directive"),
        ("tree t\nvertex a\n", 2, "vertex <id> <label>"),
        ("tree t\nvertex a 1\nvertex a 2\n", 3, "duplicate vertex a"),
        ("tree t\nvertex a -1\n", 2, "nonnegative"),
        ("tree t\nvertex a x\n", 2, "not a decimal"),
        ("tree t\nvertex a 1\nedge a b\n", 3, "undeclared vertex b"),
        ("tree t\nvertex a 1\nvertex b 1\nedge a b\nedge b a\n", 5, "duplicate edge"),
        ("tree t\nvertex a 1\nvertex b 1\nedge a b\nvertex c 1\n", 5, "precede edges"),
        ("tree t\nnode a 1\n", 2, "unknown directive"),
        ("tree t\ntree u\n", 2, "only one"),
    ])
    def test_syntax_errors_carry_line_numbers(self, text, line, fragment):
        with pytest.raises(TreeSyntaxError) as exc:
            parse_tree(text)
        assert exc.value.line == line
        assert fragment in str(exc.value)
        assert str(exc.value).startswith(f"line {line}:")

    def test_empty_input(self):
        with pytest.raises(TreeSyntaxError, match="empty input"):
            parse_tree("# nothing here\n")

    def test_cycle_is_not_a_syntax_error(self):
        text = "tree t\nvertex a 1\nvertex b 1\nvertex c 1\nedge a b\nedge b c\nedge c a\n"
        with pytest.raises(NotATreeError, match="cycle a,b,c"):
            parse_tree(text)

    def test_undecodable_file(self, tmp_path):
        path = tmp_path / "latin1.tree"
        path.write_bytes("tree t\nvertex é 1\n".encode("latin-1"))
        with pytest.raises(TreeSyntaxError) as exc:
            load_tree(path)
        assert exc.value.line == 2
        assert "not valid UTF-8" in str(exc.value)
