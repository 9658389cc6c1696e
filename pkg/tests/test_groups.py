import random
from collections import Counter

import pytest

from cgraph import (
    direct_product,
    group_from_file_text,
    group_from_operation,
    group_from_permutations,
)
from cgraph.catalog import build
from cgraph.groups import ClosureCapError, parse_cycles


def s3():
    return build("S", 3)


def test_s3_generation():
    g = s3()
    assert g.order == 6
    assert len(g.center()) == 1
    assert sorted(g.element_order(x) for x in g.elements()) == [1, 2, 2, 2, 3, 3]


def test_sz2_closure_count():
    # <(1 2 3 4 5), (2 3 5 4)> closes to 20 elements (checked by brute force)
    g = group_from_permutations([(1, 2, 3, 4, 0), (0, 2, 4, 1, 3)])
    assert g.order == 20
    assert len(g.center()) == 1


def test_empty_generator_list_gives_trivial_group():
    assert group_from_permutations([]).order == 1


def test_non_bijection_generator_raises():
    with pytest.raises(ValueError):
        group_from_permutations([(0, 0, 1)])


def test_closure_cap():
    with pytest.raises(ClosureCapError):
        group_from_permutations([(1, 2, 3, 4, 0), (0, 2, 4, 1, 3)], cap=10)


def test_table_validation():
    from cgraph.groups import FiniteGroup
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [0, 1]])  # column repeats
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [0, 1]])  # identity not at index 0


def assert_group_sane(g, exhaustive_limit=48):
    """Latin square is enforced at construction; spot-check associativity."""
    n = g.order
    if n <= exhaustive_limit:
        triples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
    else:
        rng = random.Random(7)
        triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(20000)]
    for a, b, c in triples:
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
    for x in range(n):
        assert g.mul(x, g.inv(x)) == 0


@pytest.mark.parametrize("name,param", [
    ("S", 4), ("Q", 16), ("SD", 16), ("Sz(2)", None), ("SG16_3", None),
    ("D8*Z4", None), ("SL(2,3)", None), ("27_exp3", None), ("S", 5),
])
def test_constructions_are_groups(name, param):
    assert_group_sane(build(name, param))


def test_direct_product_orders_and_centers():
    z2d8 = build("Z2xD8")
    assert z2d8.order == 16 and len(z2d8.center()) == 4
    z3s3 = build("Z3xS3")
    assert z3s3.order == 18 and len(z3s3.center()) == 3


def test_direct_product_with_trivial_factor():
    g = s3()
    trivial = group_from_permutations([])
    prod = direct_product(trivial, g)
    assert prod.order == g.order
    assert prod.table == g.table  # same table up to relabeling


def test_direct_product_cap():
    with pytest.raises(ClosureCapError):
        direct_product(build("S", 5), build("S", 5), cap=1000)


def test_quotient_by_center():
    q8 = build("Q", 8)
    quot = q8.quotient_by_center()
    assert quot.order == 4
    assert all(quot.element_order(x) <= 2 for x in quot.elements())
    d8 = build("D", 8)
    assert d8.quotient_by_center().order == 4
    z4 = build("Z", 4)
    assert z4.quotient_by_center().order == 1


def test_quotient_requires_normal_subgroup():
    g = build("S", 4)
    reflection = next(x for x in g.elements() if g.element_order(x) == 2)
    with pytest.raises(ValueError):
        g.quotient(g.subgroup_closure([reflection]))


def test_center_and_centralizer_examples():
    assert len(s3().center()) == 1
    assert len(build("D", 8).center()) == 2
    d12 = build("D", 12)
    rotation = next(x for x in d12.elements() if d12.element_order(x) == 6)
    assert len(d12.centralizer(rotation)) == 6


def test_orbit_stabilizer():
    for name, param in [("S", 4), ("D", 12), ("SL(2,3)", None)]:
        g = build(name, param)
        for x in g.elements():
            assert len(g.conjugacy_class(x)) * len(g.centralizer(x)) == g.order


def test_center_is_intersection_of_centralizers():
    g = build("SL(2,3)")
    expected = set(range(g.order))
    for x in g.elements():
        expected &= set(g.centralizer(x))
    assert expected == set(g.center())


def test_is_ac_group():
    for order in (6, 8, 10, 12, 14, 16):
        assert build("D", order).is_ac_group()
    assert not build("S", 4).is_ac_group()
    assert build("Z", 6).is_ac_group()  # vacuously


def test_centralizer_family_examples():
    assert Counter(len(m) for m in build("D", 12).centralizer_family()) \
        == {4: 1, 2: 3}
    assert Counter(len(m) for m in build("Q", 8).centralizer_family()) \
        == {2: 3}
    assert Counter(len(m) for m in build("GL2", 3).centralizer_family()) \
        == {2: 6, 6: 3, 4: 4}


def test_centralizer_family_requires_non_abelian():
    with pytest.raises(ValueError):
        build("Z", 6).centralizer_family()


def test_centralizer_family_covers_and_partitions():
    for name, param in [("D", 14), ("Q", 16), ("SL(2,3)", None)]:
        g = build(name, param)
        center = set(g.center())
        union = set()
        total = 0
        for member in g.centralizer_family():
            union |= set(member)
            total += len(member)
        assert union == set(g.elements()) - center
        if g.is_ac_group():
            assert total == len(union)  # pairwise disjoint


def test_ac_product_scaling():
    # A x G for abelian A: family member sizes scale by |A|
    base = build("D", 8)
    sizes = base.centralizer_family().sizes()
    prod = direct_product(build("Z", 3), base)
    assert prod.is_ac_group()
    assert prod.centralizer_family().sizes() == [3 * s for s in sizes]


def test_abelian_subgroup_enumeration():
    d16 = build("D", 16)
    assert d16.max_abelian_subgroup_order() == 8
    assert build("Z2xD8").exists_abelian_subgroup_of_order(8)
    z6 = build("Z", 6)
    assert z6.max_abelian_subgroup_order() == 6
    # Q40 has an element of order 20, hence an abelian subgroup of order 10
    assert build("Q", 40).exists_abelian_subgroup_of_order(10)


def test_quotient_exponent():
    assert build("Q", 8).quotient_exponent() == 2
    assert build("D", 10).quotient_exponent() == 5
    assert build("SL(2,3)").quotient_exponent() == 3
    with pytest.raises(ValueError):
        build("Z", 4).quotient_exponent()


def test_dihedral_center_parity():
    for order in range(6, 26, 2):
        g = build("D", order)
        assert len(g.center()) == (2 if (order // 2) % 2 == 0 else 1)


def test_parse_cycles():
    assert parse_cycles("(1 2)(3 4)", 4) == (1, 0, 3, 2)
    assert parse_cycles("()", 3) == (0, 1, 2)
    with pytest.raises(ValueError):
        parse_cycles("(1 5)", 4)
    with pytest.raises(ValueError):
        parse_cycles("1 2", 4)


def test_group_file_table_roundtrip():
    g = s3()
    lines = [f"order {g.order}", "table"]
    lines += [" ".join(str(v) for v in row) for row in g.table]
    parsed = group_from_file_text("\n".join(lines))
    assert parsed.table == g.table


def test_group_file_perm_generators():
    text = "order 6\nperm-generators 3\n(1 2)\n(1 2 3)\n"
    g = group_from_file_text(text)
    assert g.order == 6
    assert not g.is_abelian()


def test_group_file_errors_report_line_numbers():
    with pytest.raises(ValueError, match="line 1"):
        group_from_file_text("nonsense")
    with pytest.raises(ValueError, match="line 3"):
        group_from_file_text("order 2\ntable\n0 1 2\n1 0")
    with pytest.raises(ValueError, match="line 3"):
        group_from_file_text("order 6\nperm-generators 3\n(1 9)\n")
    with pytest.raises(ValueError, match="header says 6"):
        group_from_file_text("order 6\nperm-generators 3\n(1 2)\n")


def test_group_from_operation_rejects_oversized_model():
    with pytest.raises(ClosureCapError):
        group_from_operation(range(100), lambda a, b: (a + b) % 100, 0, cap=50)
