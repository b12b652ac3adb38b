import random

import pytest

from intersection_graphs.chain import BudgetExceeded, GeneratedGroup, build_chain, elements
from intersection_graphs.lattice import (BUILTIN_GROUPS, all_subgroups, builtin_groups, catalog,
                                         prime_order_subgroups)
from intersection_graphs.perm import Permutation

import oracles


def orders(s):
    return sorted(m.order for m in s)


def test_cyclic6():
    assert orders(all_subgroups(catalog("cyclic", 6))) == [2, 3]


def test_klein_four():
    assert orders(all_subgroups(catalog("elementary_abelian", 2, 2))) == [2, 2, 2]


def test_a4():
    # closure oracle over the 12 elements: 3 C2, 4 C3, 1 V4
    assert orders(all_subgroups(catalog("alternating", 4))) == [2, 2, 2, 3, 3, 3, 3, 4]


def test_a5_vertex_count():
    assert len(all_subgroups(catalog("alternating", 5))) == 57


def test_trivial_and_prime_cyclic_have_no_vertices():
    assert len(all_subgroups(catalog("cyclic", 1))) == 0
    assert len(all_subgroups(catalog("cyclic", 7))) == 0


def test_prime_order_subgroups_examples():
    assert len(prime_order_subgroups(catalog("quaternion8"))) == 1
    assert prime_order_subgroups(catalog("cyclic", 5)) == []
    a5 = prime_order_subgroups(catalog("alternating", 5))
    assert len(a5) == 31
    assert sorted(c.order for c in a5).count(2) == 15
    assert sorted(c.order for c in a5).count(3) == 10
    assert sorted(c.order for c in a5).count(5) == 6


def test_catalog_examples():
    assert build_chain(catalog("alternating", 5)).order == 60
    q8 = catalog("quaternion8")
    assert q8.degree == 8 and build_chain(q8).order == 8
    v4 = catalog("direct_product", ["cyclic:2", "cyclic:2"])
    assert build_chain(v4).order == 4 and len(all_subgroups(v4)) == 3
    assert build_chain(catalog("direct_product", [("cyclic", 2), ("cyclic", 3)])).order == 6
    assert build_chain(catalog("dihedral", 6)).order == 12
    assert build_chain(catalog("symmetric", 5)).order == 120
    assert build_chain(catalog("elementary_abelian", 3, 2)).order == 9


def test_quaternion_structure():
    q8 = build_chain(catalog("quaternion8"))
    els = list(elements(q8))
    assert sorted(p.order for p in els) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert all(len(p.cycles()) == 2 or p.is_identity() or p.order == 2 for p in els)


@pytest.mark.parametrize("name, params", [("bogus", ()), ("cyclic", ()), ("cyclic", (0,)),
                                          ("dihedral", (2,)), ("elementary_abelian", (4, 2)),
                                          ("quaternion8", (3,))])
def test_catalog_errors(name, params):
    with pytest.raises(ValueError):
        catalog(name, *params)


def test_from_file():
    from intersection_graphs.certify import DATA_DIR
    g = catalog("from_file", DATA_DIR / "m11.json")
    assert g.degree == 11 and build_chain(g).order == 7920


def test_budgets():
    with pytest.raises(BudgetExceeded):
        all_subgroups(catalog("alternating", 5), group_budget=59)
    with pytest.raises(BudgetExceeded):
        all_subgroups(catalog("alternating", 5), lattice_budget=20)


SMALL = [g for g in builtin_groups(max_order=200)]


@pytest.mark.parametrize("g", SMALL, ids=lambda g: g.label)
def test_matches_brute_force_oracle(g):
    _, subs = oracles.all_subgroups([p.images for p in g.generators], g.degree)
    size = max(len(h) for h in subs)
    ref = {tuple(sorted(h)) for h in subs if 1 < len(h) < size}
    s = all_subgroups(g)
    got = {tuple(sorted(p.images for p in m.permutations())) for m in s}
    assert got == ref
    assert len(s.keys()) == len(s)


@pytest.mark.parametrize("g", SMALL, ids=lambda g: g.label)
def test_invariants(g):
    s = all_subgroups(g)
    for m in s:
        assert s.order % m.order == 0
        assert 1 < m.order < s.order
        assert m.chain.order == m.order
    # a non-identity element is covered by a vertex iff it does not generate G
    t = s.table
    covered = s.membership.any(axis=0) if len(s) else [False] * t.size
    for x in range(t.size):
        if x != t.identity:
            assert bool(covered[x]) == (t.element_orders[x] < s.order)


@pytest.mark.parametrize("args", [("alternating", 5), ("direct_product", ["symmetric:3", "cyclic:2"]),
                                  ("dihedral", 6)])
def test_generator_order_independence(args):
    g = catalog(*args)
    rng = random.Random(3)
    gens = list(g.generators)
    rng.shuffle(gens)
    # add a redundant generator too
    extra = build_chain(g).random_element(rng)
    h = GeneratedGroup(g.degree, list(reversed(gens)) + [extra], g.label)
    assert all_subgroups(g).keys() == all_subgroups(h).keys()


def test_builtins_construct():
    for name, *params in BUILTIN_GROUPS:
        g = catalog(name, *params)
        assert build_chain(g).order <= 2520
