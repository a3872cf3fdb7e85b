import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import independent_check, random_small_S, random_unit_S
from orthocolour.circulants import (
    colour_circulant_no_p_multiples,
    colour_circulant_p2,
    colour_circulant_small_S,
    conflict_sets,
    f_colouring_pair,
    f_map,
    fhat,
    fhat_colouring_pair,
    forbidden_units,
)
from orthocolour.errors import NoConstructionError
from orthocolour.graphs import CirculantSpec, circulant, cycle

PRIMES = [3, 5, 7, 11, 13]


class TestFhat:
    @pytest.mark.parametrize("args,expected", [((3, 1, 0, 0), 0), ((3, 1, 1, 2), 1), ((3, 2, 2, 0), 5)])
    def test_values(self, args, expected):
        assert fhat(*args) == expected

    @pytest.mark.parametrize("args", [(3, 0, 0, 0), (3, 3, 0, 0), (3, 1, 3, 0), (4, 1, 0, 0)])
    def test_range_errors(self, args):
        with pytest.raises(ValueError):
            fhat(*args)

    @pytest.mark.parametrize("p", PRIMES)
    def test_bijection(self, p):
        for alpha in range(1, p):
            image = {fhat(p, alpha, i, j) for i in range(p) for j in range(p)}
            assert image == set(range(p * p))

    @pytest.mark.parametrize("p,alpha", [(3, 1), (5, 2), (7, 3)])
    def test_colouring_pair(self, p, alpha):
        c1, c2 = fhat_colouring_pair(p, alpha)
        assert len(set(zip(c1, c2))) == p * p
        for c in (c1, c2):
            assert all(list(c).count(x) == p for x in range(p))
        assert all(fhat(p, alpha, c1[v], c2[v]) == v for v in range(p * p))


class TestConflictSets:
    def test_examples(self):
        a1, _ = conflict_sets(5, 1)
        assert a1 == {21, 17, 13, 9}
        assert conflict_sets(5, 2)[1] == a1
        assert conflict_sets(3, 1)[0] == {7, 5}

    @pytest.mark.parametrize("p", PRIMES)
    def test_sizes_and_identity(self, p):
        for alpha in range(1, p):
            a, b = conflict_sets(p, alpha)
            assert len(a) == len(b) == p - 1
            assert conflict_sets(p, 2 * alpha % p)[1] == a

    @pytest.mark.parametrize("p", PRIMES)
    def test_disjoint_family(self, p):
        family = [conflict_sets(p, a)[0] for a in range(1, p)]
        family += [frozenset({m}) for m in range(1, p)]
        family += [frozenset({m * p}) for m in range(1, p)]
        union = set()
        for s in family:
            assert not union & s
            union |= s
        assert len(union) == p * p - 1

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_sets_predict_conflicts(self, p):
        # brute force: which differences join two vertices with equal c1 (resp. c2)
        for alpha in range(1, p):
            c1, c2 = fhat_colouring_pair(p, alpha)
            n = p * p
            same1 = {(v - u) % n for u in range(n) for v in range(n) if u != v and c1[u] == c1[v]}
            same2 = {(v - u) % n for u in range(n) for v in range(n) if u != v and c2[u] == c2[v]}
            a, b = conflict_sets(p, alpha)
            assert same1 == a | {n - x for x in a}
            assert same2 == b | {n - x for x in b}


class TestFMap:
    @pytest.mark.parametrize("args,expected", [((3, 2, 1, 1), 5), ((3, 1, 0, 0), 0), ((5, 7, 2, 3), 6)])
    def test_values(self, args, expected):
        assert f_map(*args) == expected

    def test_non_unit(self):
        with pytest.raises(ValueError):
            f_map(3, 3, 0, 0)

    @pytest.mark.parametrize("p", PRIMES)
    def test_bijection(self, p):
        n = p * p
        for alpha in (a for a in range(1, n) if gcd(a, n) == 1):
            assert {f_map(p, alpha, i, j) for i in range(p) for j in range(p)} == set(range(n))

    def test_forbidden_units_c9(self):
        assert forbidden_units(3, {1, 8}) == {1, 4, 5, 8}

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_forbidden_units_predict_conflicts(self, p):
        n = p * p
        for s in range(1, n):
            if s % p == 0:
                continue
            bad = forbidden_units(p, {s, n - s})
            for alpha in (a for a in range(1, n) if gcd(a, n) == 1):
                c1, c2 = f_colouring_pair(p, alpha)
                clash = any(c1[u] == c1[(u + s) % n] for u in range(n))
                assert clash == (alpha in bad)
                # equal c2 means a difference that is a multiple of p
                assert not any(c2[u] == c2[(u + s) % n] for u in range(n))


class TestConstructions:
    def test_c9(self):
        c1, c2 = colour_circulant_no_p_multiples(3, {1, 8})
        assert c1.colour_count == 3
        assert list(c2[:3]) == [0, 2, 1]  # alpha = 2 puts colour j at vertex 2j mod 9
        assert independent_check(cycle(9), (c1, c2))

    def test_smallest_alpha_in_c9(self):
        assert colour_circulant_no_p_multiples(3, {1, 8}) == f_colouring_pair(3, 2)

    def test_p5_empty(self):
        assert colour_circulant_small_S(5, set()) == fhat_colouring_pair(5, 1)

    def test_p7_inverse_pair(self):
        pair = colour_circulant_small_S(7, {10, 39})
        assert independent_check(circulant(49, {10, 39}), pair)

    def test_p7_six_units(self):
        S = {1, 48, 2, 47, 3, 46}
        assert independent_check(circulant(49, S), colour_circulant_no_p_multiples(7, S))

    def test_multiples_rejected(self):
        with pytest.raises(NoConstructionError, match="multiples"):
            colour_circulant_no_p_multiples(5, {5, 20})

    def test_small_s_too_big(self):
        with pytest.raises(NoConstructionError):
            colour_circulant_small_S(5, {1, 24})

    def test_wrong_order(self):
        with pytest.raises(ValueError):
            colour_circulant_p2(3, CirculantSpec(25, frozenset({1, 24})))

    def test_non_prime(self):
        with pytest.raises(ValueError):
            colour_circulant_p2(4, {1, 15})


class TestDispatch:
    def test_prefers_unit_map(self):
        assert colour_circulant_p2(3, {1, 8}) == colour_circulant_no_p_multiples(3, {1, 8})

    def test_neither_applies(self):
        with pytest.raises(NoConstructionError) as err:
            colour_circulant_p2(5, {5, 20})
        msg = str(err.value)
        assert "no-p-multiples" in msg and "small-S" in msg

    def test_small_s_route(self):
        pair = colour_circulant_p2(7, {7, 42})
        assert pair == colour_circulant_small_S(7, {7, 42})
        assert independent_check(circulant(49, {7, 42}), pair)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_seeded_random_sets(p):
    rng = random.Random(1000 + p)
    for _ in range(20):
        S = random_small_S(rng, p)
        assert independent_check(circulant(p * p, S), colour_circulant_small_S(p, S))
        S = random_unit_S(rng, p)
        assert independent_check(circulant(p * p, S), colour_circulant_no_p_multiples(p, S))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7, 11]), st.randoms(use_true_random=False))
def test_no_p_multiples_second_colour_has_no_edge(p, rng):
    S = random_unit_S(rng, p)
    _, c2 = colour_circulant_no_p_multiples(p, S)
    g = circulant(p * p, S)
    assert all(c2[u] != c2[v] for u, v in g.edges)
