import random

from chow.generate import (random_tn_matrix, random_resolvable, random_weak_poset, random_kls_g,
                           paving_instances, random_series)
from chow.incidence import check_kls
from chow.minors import is_tn
from chow.poset import boolean_algebra, satisfies_covering, paving_extension
from chow.resolution import verify_resolution, Resolution


def test_reproducible_from_seed():
    a = random_tn_matrix(random.Random(11), 5)
    b = random_tn_matrix(random.Random(11), 5)
    assert a == b
    assert random_series(random.Random(3), 6).coeffs == random_series(random.Random(3), 6).coeffs


def test_generated_matrices():
    rng = random.Random(0)
    for _ in range(5):
        assert is_tn(random_tn_matrix(rng, 5))
        R, lam = random_resolvable(rng, 5)
        assert isinstance(verify_resolution(R, lam), Resolution)


def test_generated_posets_and_g():
    rng = random.Random(1)
    for _ in range(10):
        P = random_weak_poset(rng, max_size=10)
        assert len(P) <= 10 and P.is_bounded()
        check_kls(random_kls_g(rng, P))


def test_paving_instances_are_graded():
    for n, d, H in paving_instances(random.Random(2), 6, max_n=5):
        B = boolean_algebra(n)
        assert satisfies_covering(B, d, H)
        assert paving_extension(B, d, H).is_graded()
