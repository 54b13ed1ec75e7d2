"""Module and map enumeration: exhaustiveness and determinism."""

import pytest

from reflexa.algebra import Quiver, bound_quiver_algebra
from reflexa.fields import FieldSpec
from reflexa.enumeration import enumerate_maps, enumerate_modules, harness_universe
from reflexa.modules import LEFT, hom_space, is_isomorphic, projective, simple

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)


@pytest.fixture(scope="module")
def kA2():
    return bound_quiver_algebra(F2, Quiver.make(2, [("a", 0, 1)]), [], name="kA2")


@pytest.fixture(scope="module")
def kx2():
    return bound_quiver_algebra(F2, Quiver.make(1, [("x", 0, 0)]), [["x", "x"]], name="kx2")


class TestModuleCounts:
    def test_kA2_dim4(self, kA2):
        # multisets of {S0, S1, P0} with total dimension <= 4: 21 classes
        uni = enumerate_modules(kA2, LEFT, 4)
        assert len(uni.modules) == 21
        assert not uni.budget_exhausted

    def test_kx2_dim4(self, kx2):
        # partitions with parts <= 2 of every total <= 4: 8 classes
        uni = enumerate_modules(kx2, LEFT, 4)
        assert len(uni.modules) == 8

    def test_kx3_dim4(self):
        kx3 = bound_quiver_algebra(
            F2, Quiver.make(1, [("x", 0, 0)]), [["x", "x", "x"]], name="kx3"
        )
        # partitions with parts <= 3 of totals <= 4: 10 classes
        uni = enumerate_modules(kx3, LEFT, 4)
        assert len(uni.modules) == 10

    def test_pairwise_noniso(self, kA2):
        uni = enumerate_modules(kA2, LEFT, 3)
        for i, m in enumerate(uni.modules):
            for n in uni.modules[i + 1 :]:
                if m.dims == n.dims:
                    assert is_isomorphic(m, n) is None

    def test_odd_prime(self):
        a = bound_quiver_algebra(F3, Quiver.make(1, [("x", 0, 0)]), [["x", "x"]])
        uni = enumerate_modules(a, LEFT, 2)
        # k, k^2, k[x]/(x^2): same classification at any prime
        assert len(uni.modules) == 3

    def test_determinism(self, kA2):
        a = enumerate_modules(kA2, LEFT, 3)
        b = enumerate_modules(kA2, LEFT, 3)
        assert [m.signature() for m in a.modules] == [m.signature() for m in b.modules]


class TestHarnessUniverse:
    def test_standard_modules_present(self, kx2):
        uni = harness_universe(kx2, LEFT, 1)
        # dim budget 1 sees only the simple, but the regular module is added
        dims = sorted(m.total_dim for m in uni.modules)
        assert dims == [1, 2]

    def test_no_duplicates(self, kA2):
        uni = harness_universe(kA2, LEFT, 4)
        assert len(uni.modules) == 21  # standard modules are all within budget


class TestEnumerateMaps:
    def test_full_hom_space(self, kA2):
        p0 = projective(kA2, 0)
        maps, exhaustive = enumerate_maps(p0, p0, 64)
        assert exhaustive
        assert len(maps) == 1  # End(P0) = k, one nonzero map over F_2

    def test_empty(self, kA2):
        maps, exhaustive = enumerate_maps(simple(kA2, 0), projective(kA2, 0), 64)
        assert maps == [] and exhaustive

    def test_cap(self, kx2):
        from reflexa.modules import direct_sum, regular_module

        reg = regular_module(kx2, LEFT)
        big, _, _ = direct_sum([reg, reg, reg])
        maps, exhaustive = enumerate_maps(big, big, 8)
        assert not exhaustive
        # the full basis (18 maps here) is always included; only the extra
        # pairwise sums respect the cap
        assert len(maps) == 18

    def test_maps_are_valid(self, kA2):
        p0, s1 = projective(kA2, 0), simple(kA2, 1)
        maps, _ = enumerate_maps(p0, s1, 64)
        for fm in maps:
            for k in range(kA2.dim):
                assert p0.act[k] @ fm.matrix == fm.matrix @ s1.act[k]
