#!/usr/bin/env python3
"""
GroupsService 单元测试
"""
from concurrent.futures import ThreadPoolExecutor

import pytest

from src.core.errors.exceptions import GroupTooLargeError, NotAPGroupError, ValidationError
from src.models.perm_group import PermGroup
from src.service.groups_service import (
    REASON_BRAUER,
    REASON_P_LENGTH,
    GroupsService,
    alternating_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    generalized_dihedral,
    symmetric_group,
)


class TestPermGroup:
    """置换群模型"""

    def test_orders(self):
        assert symmetric_group(6).order() == 720
        assert alternating_group(5).order() == 60
        assert cyclic_group(7).order() == 7
        assert dihedral_group(9).order() == 18
        assert generalized_dihedral(3, 2).order() == 18
        assert direct_product(symmetric_group(3), cyclic_group(3)).order() == 18

    def test_orbits_include_fixed_points(self):
        group = PermGroup.from_cycles(6, ["(1,2,3)"])
        assert group.orbits() == [{0, 1, 2}, {3}, {4}, {5}]
        assert not group.is_transitive()
        assert symmetric_group(6).is_transitive()

    def test_contains(self):
        group = symmetric_group(4)
        assert group.contains((1, 0, 2, 3))
        assert not alternating_group(4).contains((1, 0, 2, 3))

    def test_degree_limit(self):
        with pytest.raises(GroupTooLargeError):
            PermGroup(17)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValidationError):
            PermGroup(3, ((0, 0, 1),))

    def test_dihedral_needs_three_points(self):
        with pytest.raises(ValidationError):
            dihedral_group(2)

    def test_str(self):
        assert str(PermGroup.from_cycles(3, ["(1,2,3)"])) == "<(1,2,3)> on 3 points"


class TestSylowAndPLength:
    def test_sylow_orders(self, groups_service):
        assert groups_service.sylow(symmetric_group(6), 3).order() == 9
        assert groups_service.sylow(symmetric_group(4), 2).order() == 8
        assert groups_service.sylow(cyclic_group(5), 3).order() == 1

    def test_p_length(self, groups_service):
        assert groups_service.p_length(cyclic_group(8), 2) == 3
        assert groups_service.p_length(groups_service.sylow(symmetric_group(4), 2), 2) == 2
        assert groups_service.p_length(groups_service.sylow(symmetric_group(6), 3), 3) == 1
        assert groups_service.p_length(PermGroup(3), 3) == 0

    def test_frattini_of_dihedral_8(self, groups_service):
        d8 = groups_service.sylow(symmetric_group(4), 2)
        assert groups_service.frattini(d8, 2).order() == 2

    def test_not_a_p_group(self, groups_service):
        with pytest.raises(NotAPGroupError):
            groups_service.p_length(symmetric_group(3), 3)


class TestClasses:
    def test_conjugacy_classes(self, groups_service):
        assert groups_service.conjugacy_class_count(symmetric_group(4)) == 5
        assert groups_service.p_regular_class_count(symmetric_group(4), 2) == 2
        assert groups_service.p_regular_class_count(symmetric_group(5), 2) == 3
        assert groups_service.p_regular_class_count(dihedral_group(9), 3) == 2


class TestSubgroupClasses:
    """子群共轭类枚举"""

    def test_s3(self, groups_service):
        data = groups_service.subgroup_class_data(symmetric_group(3))
        assert [c.order for c in data] == [1, 2, 3, 6]
        assert sum(c.size for c in data) == 6

    def test_s4(self, groups_service):
        data = groups_service.subgroup_class_data(symmetric_group(4))
        assert len(data) == 11
        assert sum(c.size for c in data) == 30
        assert [c.order for c in data] == sorted(c.order for c in data)

    def test_representatives_have_stated_orders(self, groups_service):
        for subgroup_class in groups_service.subgroup_class_data(symmetric_group(4)):
            assert subgroup_class.representative.order() == subgroup_class.order
            assert len(subgroup_class.representative.orbits()) == subgroup_class.orbit_count

    def test_more_orbits_first_within_an_order(self, groups_service):
        data = groups_service.subgroup_class_data(symmetric_group(4))
        keys = [(c.order, -c.orbit_count) for c in data]
        assert keys == sorted(keys)
        # 4 阶：<(1,2),(3,4)> 有两个轨道，排在两个传递的 4 阶类之前
        assert [c.orbit_count for c in data if c.order == 4] == [2, 1, 1]

    def test_deterministic(self, groups_service):
        first = [c.representative.cycle_strings() for c in groups_service.subgroup_class_data(symmetric_group(4))]
        again = [c.representative for c in GroupsService().subgroup_class_data(symmetric_group(4))]
        assert first == [g.cycle_strings() for g in again]

    def test_order_limit(self, groups_service):
        with pytest.raises(GroupTooLargeError):
            groups_service.subgroup_class_data(symmetric_group(7))

    @pytest.mark.slow
    def test_s6(self, groups_service):
        data = groups_service.s6_subgroup_classes()
        assert len(data) == 56
        assert sum(c.size for c in data) == 1455
        assert data[-1].order == 720


class TestOrder18:
    """18 阶非交换群的排除"""

    def test_all_three_eliminated(self, groups_service):
        results = groups_service.eliminate_order_18()
        assert [r.order for r in results] == [18, 18, 18]
        assert all(r.eliminated for r in results)
        assert [r.reason for r in results] == [REASON_P_LENGTH, REASON_P_LENGTH, REASON_BRAUER]
        assert results[2].sylow_p_length == 2
        assert results[2].brauer_count == 2


# ---------------------------------------------------------------------------
# 按元素穷举的对照实现
# ---------------------------------------------------------------------------

def _mul(a, b):
    """a then b"""
    return tuple(b[x] for x in a)


def _inv(a):
    result = [0] * len(a)
    for i, x in enumerate(a):
        result[x] = i
    return tuple(result)


def _generate(gens, degree):
    ident = tuple(range(degree))
    found = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = _mul(x, g)
            if y not in found:
                found.add(y)
                frontier.append(y)
    return frozenset(found)


def _all_subgroups(elements, degree):
    """Every subgroup, reached by closing <H, g> upward from the trivial group."""
    trivial = _generate((), degree)
    gens_of = {trivial: ()}
    frontier = [trivial]
    while frontier:
        sub = frontier.pop()
        for g in elements:
            if g in sub:
                continue
            gens = gens_of[sub] + (g,)
            bigger = _generate(gens, degree)
            if bigger not in gens_of:
                gens_of[bigger] = gens
                frontier.append(bigger)
    return list(gens_of)


def _conjugate(sub, g):
    gi = _inv(g)
    return frozenset(_mul(_mul(gi, h), g) for h in sub)


def _subgroup_class_orders(elements, subgroups):
    """Order of each conjugacy class of subgroups, sorted."""
    seen = set()
    orders = []
    for sub in subgroups:
        if sub in seen:
            continue
        orders.append(len(sub))
        seen.update(_conjugate(sub, g) for g in elements)
    return sorted(orders)


def _power(a, k):
    result = tuple(range(len(a)))
    for _ in range(k):
        result = _mul(result, a)
    return result


def _shortest_elementary_series(elements, degree, p):
    """
    Length of the shortest chain P = P0 > P1 > ... > 1 with each P(i+1) normal
    in P(i) and P(i)/P(i+1) elementary abelian, by search over all subgroups.
    """
    subgroups = _all_subgroups(elements, degree)
    depth = {}

    for sub in sorted(subgroups, key=len):
        if len(sub) == 1:
            depth[sub] = 0
            continue
        # H/N 为初等交换 p-群 当且仅当 N 包含全部 p 次幂与换位子
        required = {_power(h, p) for h in sub}
        required |= {_mul(_mul(_inv(a), _inv(b)), _mul(a, b)) for a in sub for b in sub}
        best = None
        for n in subgroups:
            if not n < sub or not required <= n:
                continue
            if any(_conjugate(n, h) != n for h in sub):
                continue
            if best is None or depth[n] + 1 < best:
                best = depth[n] + 1
        depth[sub] = best
    return depth[frozenset(elements)]


def quaternion_group():
    return PermGroup.from_cycles(8, ["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"])


def wreath_c4_c2():
    return PermGroup.from_cycles(8, ["(1,2,3,4)", "(1,5)(2,6)(3,7)(4,8)"])


class TestBruteForceSubgroups:
    """子群共轭类与逐元素穷举一致"""

    @pytest.mark.parametrize("make,classes,total", [
        (lambda: symmetric_group(3), 4, 6),
        (lambda: dihedral_group(4), 8, 10),
        (lambda: alternating_group(4), 5, 10),
        (lambda: symmetric_group(4), 11, 30),
    ])
    def test_class_and_subgroup_counts(self, groups_service, make, classes, total):
        group = make()
        elements = groups_service.elements(group)
        subgroups = _all_subgroups(elements, group.degree)
        assert len(subgroups) == total
        class_orders = _subgroup_class_orders(elements, subgroups)
        assert len(class_orders) == classes

        data = groups_service.subgroup_class_data(group)
        assert len(data) == classes
        assert sum(c.size for c in data) == total
        assert [c.order for c in data] == class_orders

    def test_concurrent_enumeration_shares_result(self):
        service = GroupsService()
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda _: service.subgroup_class_data(symmetric_group(4)), range(8)))
        assert all(r is results[0] for r in results)


class TestPLengthAgainstSeriesSearch:
    """Frattini 滤链深度等于初等交换次正规列的最短长度"""

    @pytest.mark.parametrize("p,make", [
        (2, lambda: cyclic_group(2)),
        (2, lambda: cyclic_group(4)),
        (2, lambda: cyclic_group(8)),
        (2, lambda: cyclic_group(16)),
        (3, lambda: cyclic_group(9)),
        (5, lambda: cyclic_group(5)),
        (2, lambda: dihedral_group(4)),
        (2, lambda: dihedral_group(8)),
        (2, lambda: dihedral_group(16)),
        (2, quaternion_group),
        (2, wreath_c4_c2),
        (2, lambda: direct_product(cyclic_group(4), cyclic_group(2))),
        (2, lambda: direct_product(cyclic_group(4), cyclic_group(4))),
        (2, lambda: direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))),
        (3, lambda: direct_product(cyclic_group(3), cyclic_group(3))),
        (3, lambda: direct_product(cyclic_group(9), cyclic_group(3))),
        (5, lambda: direct_product(cyclic_group(5), cyclic_group(5))),
        (2, lambda: GroupsService().sylow(symmetric_group(6), 2)),
        (3, lambda: GroupsService().sylow(symmetric_group(6), 3)),
        pytest.param(2, lambda: direct_product(cyclic_group(8), cyclic_group(8)), marks=pytest.mark.slow),
        pytest.param(2, lambda: direct_product(quaternion_group(), cyclic_group(8)), marks=pytest.mark.slow),
    ])
    def test_matches_series_search(self, groups_service, p, make):
        group = make()
        assert group.order() <= 64
        elements = groups_service.elements(group)
        assert groups_service.p_length(group, p) == _shortest_elementary_series(elements, group.degree, p)

    def test_cyclic_9(self, groups_service):
        assert groups_service.p_length(cyclic_group(9), 3) == 2
        assert groups_service.frattini(cyclic_group(9), 3).order() == 3

    def test_quaternion(self, groups_service):
        q8 = quaternion_group()
        assert q8.order() == 8
        assert groups_service.p_length(q8, 2) == 2


class TestGeneralizedDihedral:
    """(Z/p)^m ⋊ C2：共轭类 (p^m - 1)/2 + 2 个，p-正则类 2 个"""

    @pytest.mark.parametrize("p", [3, 5])
    @pytest.mark.parametrize("m", [1, 2])
    def test_class_counts(self, groups_service, p, m):
        group = generalized_dihedral(p, m)
        assert group.order() == 2 * p ** m
        assert groups_service.conjugacy_class_count(group) == (p ** m - 1) // 2 + 2
        assert groups_service.p_regular_class_count(group, p) == 2

    def test_order_18_member(self, groups_service):
        group = generalized_dihedral(3, 2)
        assert groups_service.p_regular_class_count(group, 3) == 2
        assert groups_service.p_length(groups_service.sylow(group, 3), 3) == 1
