import numpy as np
import pytest

import kac_typicality.rootdata as rd
import kac_typicality.scalars as sc
import kac_typicality.representations.common as cm
import kac_typicality.representations.induction as ind
import kac_typicality.representations.simplicity as sim
from kac_typicality.errors import PreconditionError, ResourceCapError


def baby_verma(m, n, p, coords):
    shape = rd.Shape(m, n)
    fq = sc.fq_make(p, 1)
    lam = cm.ModLambda(shape, fq, coords)
    chi = cm.PChar.zero(shape, fq)
    return ind.baby_verma_g0(lam, chi), chi


def test_count_and_iterate_lines():
    fq = sc.fq_make(3, 1)
    assert sim.count_lines(3, 1) == 1
    assert sim.count_lines(3, 2) == 4
    K = fq.identity(2)
    lines = [[int(x) for x in v] for v in sim.iterate_lines(fq, K)]
    assert lines == [[1, 0], [1, 1], [1, 2], [0, 1]]


def test_spin():
    Z, _ = baby_verma(2, 0, 3, [1, 0])
    B = sim.spin(Z, [1, 0, 0])
    assert B.shape[0] == 3
    # f^2 v spans a submodule of dimension one.
    B = sim.spin(Z, [0, 0, 1])
    assert B.shape[0] == 1
    with pytest.raises(PreconditionError):
        sim.spin(Z, [0, 0, 0])


def test_singular_space():
    Z, _ = baby_verma(2, 0, 3, [1, 0])
    S = sim.singular_space(Z)
    assert S.shape[0] == 2
    spaces = sim.singular_weight_spaces(Z)
    assert [w for (w, _) in spaces] == [(1, 0), (2, 2)]


@pytest.mark.parametrize("coords,simple", [([0, 0], False), ([1, 0], False),
                                           ([2, 0], True), ([1, 2], True)])
def test_is_simple_gl2(coords, simple):
    Z, _ = baby_verma(2, 0, 3, coords)
    assert sim.is_simple(Z) == simple
    assert sim.is_simple_bruteforce(Z) == simple


@pytest.mark.parametrize("coords,dim", [([0, 0], 1), ([1, 0], 2), ([2, 0], 3),
                                        ([0, 1], 3), ([2, 1], 2)])
def test_simple_head_gl2(coords, dim):
    Z, _ = baby_verma(2, 0, 3, coords)
    L = sim.simple_head(Z)
    assert L.dim == dim
    assert sim.is_simple(L)
    assert sim.is_simple_bruteforce(L)
    assert L.weight(0) == tuple(coords)


def test_quotient_keeps_weight_basis():
    Z, _ = baby_verma(2, 0, 3, [1, 0])
    N = sim.spin(Z, [0, 0, 1])
    Q, keep = sim.quotient(Z, N)
    assert keep == [0, 1]
    assert Q.weights() == [(1, 0), (0, 1)]
    Q.check()


def test_submodule_lattice_bruteforce():
    Z, _ = baby_verma(2, 0, 3, [0, 0])
    subs = sim.submodule_lattice_bruteforce(Z)
    # uniserial with composition length two.
    assert [B.shape[0] for B in subs] == [0, 2, 3]


def test_bruteforce_cap():
    Z, _ = baby_verma(2, 0, 3, [0, 0])
    with pytest.raises(ResourceCapError):
        sim.submodule_lattice_bruteforce(Z, cap_size=10)


def test_line_cap():
    Z, _ = baby_verma(2, 0, 3, [1, 0])
    with pytest.raises(ResourceCapError):
        sim.is_simple(Z, cap_lines=1)


def test_invariants_of_kac_modules():
    Z, chi = baby_verma(1, 1, 3, [1, 1])
    K = ind.induce_kac(Z, chi)
    assert sim.invariants_g1(K).shape[0] == 1
    assert sim.invariants_g_minus1(K).shape[0] == 1
    assert sim.is_simple(K)

    Z, chi = baby_verma(1, 1, 3, [1, 2])
    K = ind.induce_kac(Z, chi)
    # atypical: f v is singular.
    assert sim.invariants_g1(K).shape[0] == 2
    assert not sim.is_simple(K)
    assert not sim.is_simple_bruteforce(K)


def test_joint_kernel_on_columns():
    Z, _ = baby_verma(2, 0, 3, [1, 0])
    K = sim.joint_kernel(Z, [(1, 2)], columns=[2])
    assert K.shape == (1, 3)
    assert [int(x) for x in K[0]] == [0, 0, 1]
    assert np.all(sim.joint_kernel(Z, []) == Z.fq.identity(3))
