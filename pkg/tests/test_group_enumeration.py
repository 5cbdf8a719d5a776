import random
import sys
from itertools import product
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from group.chain import build_group
from group.enumeration import (
    EnumerationLimitError,
    center,
    conjugacy_classes,
    elements,
    enumerate_normal_subgroups,
    group_from_elements,
    intersect,
    invariant_factors,
    minimal_normal_subgroups,
    monolith,
    monolith_by_sampling,
    structure_fingerprint,
)
from perm.notation import parse_cycles
from tableau.spec import parse_spec
from wreath.products import build_wreath


def _s4():
    return build_group([parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4)])


def _d4():
    return build_group([parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)])


def test_elements_are_distinct_and_complete():
    items = elements(_s4())
    assert len(items) == 24
    assert len(set(items)) == 24


def test_enumeration_limit():
    with pytest.raises(EnumerationLimitError, match="enumeration limit exceeded") as info:
        elements(_s4(), limit=10)
    assert info.value.order == 24
    assert info.value.limit == 10


def test_conjugacy_classes_of_s4():
    classes = conjugacy_classes(_s4())
    assert classes[0].representative.is_Identity
    assert sorted(c.size for c in classes) == [1, 3, 6, 6, 8]


def test_center():
    assert center(_s4()).order == 1
    assert center(_d4()).order == 2


def test_normal_subgroup_lattice_of_s4():
    lattice = enumerate_normal_subgroups(_s4())
    assert lattice.orders() == [1, 4, 12, 24]
    assert lattice.parents(0) == [1]
    assert lattice.parents(1) == [2]
    assert lattice.children(3) == [2]
    assert lattice.join(1, 2) == 2
    assert lattice.meet(1, 2) == 1
    assert minimal_normal_subgroups(lattice) == [1]
    assert lattice.locate(build_group([parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])) == 1


def test_monolith_of_s4_is_klein_four():
    mono = monolith(_s4())
    assert mono is not None
    assert mono.order == 4
    assert mono.contains(parse_cycles("(1,2)(3,4)", 4))


def test_abelian_group_of_order_four_is_not_monolithic():
    klein = build_group([parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
    assert monolith(klein) is None


def test_monolith_by_sampling_on_s4():
    klein = [parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)]
    evidence = monolith_by_sampling(_s4(), 20, random.Random(0), klein)
    assert len(evidence.samples) == 20
    assert not evidence.missing
    assert all(evidence.smallest.contains(p) for p in klein)
    assert evidence.common is not None


def test_intersect_and_group_from_elements():
    G = _s4()
    A4 = build_group([parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)])
    common = intersect(A4, _d4(), G)
    assert common.order == 4
    rebuilt = group_from_elements(elements(A4), 4)
    assert rebuilt.order == 12


def test_structure_fingerprint_of_s4():
    fingerprint = structure_fingerprint(_s4())
    assert fingerprint.as_dict() == {
        "order": 24,
        "derived_order": 12,
        "center_order": 1,
        "abelianization": [2],
        "exponent_of_abelianization": 2,
    }


def _brute_normal_keys(G, classes):
    """Unions of classes that are closed under multiplication, as class-index sets."""
    items = elements(G)
    position = {x: i for i, x in enumerate(items)}
    table = [[position[a * b] for b in items] for a in items]
    class_of = {position[x]: k for k, c in enumerate(classes) for x in c.members}
    identity_class = class_of[position[next(x for x in items if x.is_Identity)]]
    others = [k for k in range(len(classes)) if k != identity_class]
    keys = set()
    for choice in product([False, True], repeat=len(others)):
        key = {identity_class} | {k for k, keep in zip(others, choice) if keep}
        members = [i for i, k in class_of.items() if k in key]
        if all(class_of[table[a][b]] in key for a in members for b in members):
            keys.add(frozenset(key))
    return keys


@pytest.mark.parametrize("text", ["S3*S2", "S2*S3"])
def test_normal_subgroups_match_brute_force(text):
    G = build_wreath(parse_spec(text))
    assert G.order <= 500
    lattice = enumerate_normal_subgroups(G)
    assert {member.key for member in lattice.members} == _brute_normal_keys(G, lattice.classes)
    for a in range(len(lattice)):
        for b in range(len(lattice)):
            meet = lattice.meet(a, b)
            join = lattice.join(a, b)
            assert lattice.includes(meet, a) and lattice.includes(meet, b)
            assert lattice.includes(a, join) and lattice.includes(b, join)


def test_classes_of_s3s2():
    G = build_wreath(parse_spec("S3*S2"))
    classes = conjugacy_classes(G)
    assert len(classes) == 10
    assert sum(c.size for c in classes) == G.order
    assert all(G.order % c.size == 0 for c in classes)


@pytest.mark.parametrize(
    "primary,factors",
    [((), ()), ((2, 3), (6,)), ((2, 2, 3), (2, 6)), ((2, 4, 3, 9), (6, 36)), ((2, 2), (2, 2))],
)
def test_invariant_factors(primary, factors):
    assert invariant_factors(primary) == factors


def test_fingerprint_uses_invariant_factors():
    c6 = build_group([parse_cycles("(1,2,3)(4,5)", 5)])
    assert structure_fingerprint(c6).abelianization == (6,)
    c2c6 = build_group([parse_cycles("(1,2,3)(4,5)", 7), parse_cycles("(6,7)", 7)])
    fingerprint = structure_fingerprint(c2c6)
    assert fingerprint.abelianization == (2, 6)
    assert fingerprint.exponent_of_abelianization == 6


def test_sampling_needs_a_positive_count():
    with pytest.raises(ValueError, match="sample count must be positive"):
        monolith_by_sampling(_s4(), 0, random.Random(0), [])
