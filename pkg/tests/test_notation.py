import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from perm.notation import format_cycles, parse_cycles
from perm.permutations import cycle, identity, images_of


def test_parse_cycles_with_commas_and_spaces():
    p = parse_cycles("(1, 2, 3)(4 5)", 5)
    assert images_of(p) == (2, 3, 1, 5, 4)
    assert parse_cycles(" ( 1 2 3 ) ( 4,5 ) ", 5) == p


def test_parse_compact_digits_for_small_degree():
    assert parse_cycles("(123)", 3) == cycle((1, 2, 3), 3)
    assert parse_cycles("(147)(258)(369)", 9) == parse_cycles("(1,4,7)(2,5,8)(3,6,9)", 9)


def test_identity_words():
    for text in ("()", "e", "", "(1)"):
        assert parse_cycles(text, 4) == identity(4)


@pytest.mark.parametrize(
    "text",
    ["(1,2)(2,3)", "(1,5)", "(1,x)", "1,2", "(1,2", "(0,1)"],
)
def test_parse_cycles_rejects_bad_input(text):
    with pytest.raises(ValueError):
        parse_cycles(text, 4)


def test_format_cycles():
    assert format_cycles(identity(3)) == "()"
    assert format_cycles(parse_cycles("(2,4)(1,3,5)", 6)) == "(1,3,5)(2,4)"


def test_format_then_parse_keeps_permutation():
    p = parse_cycles("(1,9,4)(2,7)", 9)
    assert parse_cycles(format_cycles(p), 9) == p
