import random
import sys
from collections import deque
from itertools import combinations, permutations
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from perm.permutations import (
    commutator,
    compose,
    conjugate,
    cycle,
    cycle_type,
    from_images,
    identity,
    images_of,
    inverse,
    is_even,
    random_permutation,
    rank,
    sign,
    transposition,
)


def _transposition_distances(degree):
    """Breadth-first distance from the identity in the transposition Cayley graph."""
    start = identity(degree)
    moves = [transposition(i, j, degree) for i, j in combinations(range(1, degree + 1), 2)]
    distance = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for t in moves:
            q = p * t
            if q not in distance:
                distance[q] = distance[p] + 1
                queue.append(q)
    return distance


def test_compose_applies_left_operand_first():
    p = transposition(1, 2, 3)
    q = transposition(2, 3, 3)
    assert images_of(compose(p, q)) == (3, 1, 2)
    assert images_of(compose(q, p)) == (2, 3, 1)


def test_inverse_undoes_compose():
    rng = random.Random(1)
    for _ in range(50):
        p = random_permutation(6, rng)
        assert compose(p, inverse(p)) == identity(6)


def test_conjugate_and_commutator_conventions():
    a = transposition(1, 2, 4)
    b = cycle((1, 2, 3, 4), 4)
    assert conjugate(a, b) == b * a * ~b
    assert commutator(a, b) == a * b * ~a * ~b
    assert is_even(commutator(a, b))


def test_degree_mismatch_is_rejected():
    with pytest.raises(ValueError, match="degree mismatch"):
        compose(identity(3), identity(4))
    with pytest.raises(ValueError, match="degree mismatch"):
        commutator(identity(3), identity(4))


def test_from_images_checks_bijection():
    assert images_of(from_images([2, 3, 1])) == (2, 3, 1)
    with pytest.raises(ValueError):
        from_images([1, 1, 3])


def test_cycle_type_and_rank():
    p = cycle((1, 2, 3), 5) * transposition(4, 5, 5)
    assert cycle_type(p).display == (3, 2)
    assert str(cycle_type(p)) == "(3,2)"
    assert cycle_type(p).lengths == (3, 2)
    assert rank(p) == 3
    assert sign(p) == -1
    assert rank(identity(4)) == 0
    assert sign(identity(4)) == 1


@pytest.mark.parametrize("degree", range(1, 7))
def test_rank_is_minimal_transposition_count(degree):
    distances = _transposition_distances(degree)
    assert len(distances) == [1, 1, 2, 6, 24, 120, 720][degree]
    for p, steps in distances.items():
        assert rank(p) == steps


@pytest.mark.parametrize("degree", range(2, 9))
def test_rank_parity_is_multiplicative(degree):
    rng = random.Random(degree)
    for _ in range(500):
        p = random_permutation(degree, rng)
        q = random_permutation(degree, rng)
        assert rank(p * q) % 2 == (rank(p) + rank(q)) % 2
        assert sign(p * q) == sign(p) * sign(q)


def _all_permutations(degree):
    return [from_images(images) for images in permutations(range(1, degree + 1))]


@pytest.mark.parametrize("degree", range(1, 6))
def test_conjugation_preserves_cycle_type(degree):
    group = _all_permutations(degree)
    for p in group:
        shape = cycle_type(p)
        for b in group:
            assert cycle_type(conjugate(p, b)) == shape


@pytest.mark.parametrize("degree", range(1, 6))
def test_parity_is_a_homomorphism_on_the_whole_group(degree):
    group = _all_permutations(degree)
    for p in group:
        assert rank(p) == rank(inverse(p))
        for q in group:
            assert is_even(p * q) == (is_even(p) == is_even(q))


@pytest.mark.parametrize("degree", range(2, 9))
def test_rank_of_product_drops_by_an_even_amount(degree):
    rng = random.Random(100 + degree)
    for _ in range(500):
        p = random_permutation(degree, rng)
        q = random_permutation(degree, rng)
        drop = rank(p) + rank(q) - rank(p * q)
        assert drop >= 0
        assert drop % 2 == 0
