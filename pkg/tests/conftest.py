"""
Shared fixtures: small named trees, canonical schemas and file locations
"""
import os
import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from ultratree.core.tree import LabeledTree  # noqa: E402
from ultratree.lazygen import LabelRule, canonical_ray, fig1_comb, fig2_star_of_paths  # noqa: E402

TESTS_DIR = Path(__file__).parent
FIXTURES = TESTS_DIR / "fixtures"
GOLDEN = TESTS_DIR / "golden"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture
def path3() -> LabeledTree:
    """a - b - c labeled 3, 1, 2"""
    return LabeledTree({"a": 3, "b": 1, "c": 2}, [("a", "b"), ("b", "c")], name="path3")


@pytest.fixture
def star5() -> LabeledTree:
    """Center c labeled 1 with leaves l1..l4 labeled 1..4"""
    labels = {"c": 1, "l1": 1, "l2": 2, "l3": 3, "l4": 4}
    return LabeledTree(labels, [("c", f"l{k}") for k in range(1, 5)], name="star5")


@pytest.fixture
def caterpillar() -> LabeledTree:
    """Spine s1 - s2 - s3 with two leaves on s2 and one on s3"""
    labels = {"s1": 2, "s2": 5, "s3": 1, "p1": 3, "p2": 0, "p3": 4}
    edges = [("s1", "s2"), ("s2", "s3"), ("s2", "p1"), ("s2", "p2"), ("s3", "p3")]
    return LabeledTree(labels, edges, name="caterpillar")


@pytest.fixture
def ray_affine():
    return canonical_ray(LabelRule.affine(0, 1))


@pytest.fixture
def ray_recip():
    return canonical_ray(LabelRule.recip())


@pytest.fixture
def comb():
    return fig1_comb()


@pytest.fixture
def star_of_paths():
    return fig2_star_of_paths()
