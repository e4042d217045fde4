import pytest

import fleet
import oracle
from qlab.exact import Matrix, ONE, TensorLayout, place_operator, q
from qlab.exact.linalg import rank
from qlab.braidings import flip, flip_matrix
from qlab.schur_weyl import (Partition, SchurWeylError, decompose, hecke_rep, isotypic_central, partitions,
                             standard_tableaux, verify_bank, young_projectors)


def test_partitions_and_tableaux():
    assert [p.parts for p in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert len(standard_tableaux(Partition((2, 1)))) == 2
    assert len(standard_tableaux(Partition((3, 2)))) == 5
    assert Partition((2, 1)).addable_contents() == [2, 0, -2]
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_hecke_rep_of_flip_is_permutations():
    gens = hecke_rep(fleet.braiding('flip2'), 3)
    lay = TensorLayout.power(2, 3)
    assert gens == [place_operator(flip_matrix(2), i, lay) for i in (1, 2)]


def test_hecke_rep_standard():
    R1, R2 = hecke_rep(fleet.braiding('std2'), 3)
    eye = Matrix.identity(8)
    assert R1 @ R2 @ R1 == R2 @ R1 @ R2
    for g in (R1, R2):
        assert ((g - eye * q) @ (g + eye * q.inverse())).is_zero()


def test_hecke_rep_needs_two_factors():
    with pytest.raises(SchurWeylError):
        hecke_rep(fleet.braiding('std2'), 1)


def test_k2_projector_formulas():
    # k = 2: E_(2) = (R + q^-1)/(q + q^-1), E_(1,1) = (q - R)/(q + q^-1)
    r = fleet.braiding('std2')
    bank = fleet.bank('std2', 2)
    Rm = r.map()
    eye = Matrix.identity(4)
    s = q + q.inverse()
    assert bank.projectors[((2,), 1)] == (Rm + eye * q.inverse()) * s.inverse()
    assert bank.projectors[((1, 1), 1)] == (eye * q - Rm) * s.inverse()
    fbank = fleet.bank('flip2', 2)
    assert fbank.projectors[((2,), 1)] == (flip_matrix(2) + eye) * (ONE / 2)


@pytest.mark.parametrize('name', ['flip2', 'std2'])
def test_rank_k2(name):
    assert decompose(fleet.braiding(name), 2, fleet.bank(name, 2)) == [(Partition((2,)), 1, 3), (Partition((1, 1)), 1, 1)]


def test_standard_k3_matches_classical_schur_weyl():
    parts = decompose(fleet.braiding('std2'), 3, fleet.bank('std2', 3))
    assert [(p.parts, a, d) for p, a, d in parts] == [((3,), 1, 4), ((2, 1), 1, 2), ((2, 1), 2, 2), ((1, 1, 1), 1, 0)]
    for p, _, d in parts:
        assert d == oracle.hook_content_dim(p.parts, 2)


def test_super_flip_k2():
    parts = decompose(fleet.braiding('sflip11'), 2)
    assert len(parts) == 2 and sum(d for _, _, d in parts) == 4


CASES = [('flip2', 2), ('flip2', 3), ('flip2', 4), ('std2', 2), ('std2', 3), ('std2', 4), ('sflip11', 3),
         ('sflip11', 4), ('flip3', 2), ('flip3', 3), ('std3', 2), ('std3', 3), ('sflip21', 3)]


@pytest.mark.parametrize('name,k', CASES)
def test_bank_laws(name, k):
    bank = fleet.bank(name, k)
    assert verify_bank(bank)
    assert isotypic_central(bank)
    for key, e in bank.projectors.items():
        assert rank(e) == bank.dims[key]
    if not name.startswith('sflip'):
        n = fleet.braiding(name).n
        for (parts, _), d in bank.dims.items():
            assert d == oracle.hook_content_dim(parts, n)


def test_degree_cap():
    with pytest.raises(SchurWeylError):
        young_projectors(fleet.braiding('std2'), 5)
    with pytest.raises(SchurWeylError):
        young_projectors(flip(4), 4)


@pytest.mark.parametrize('name', fleet.FLEET)
def test_q_projectors(name):
    qp = fleet.qp(name)
    n4 = fleet.braiding(name).n ** 4
    eye = Matrix.identity(n4)
    Q = qp.Q
    assert qp.polynomial_ok and qp.ybe
    assert qp.S @ qp.S == qp.S and (qp.S @ qp.A).is_zero() and qp.S + qp.A == eye
    assert rank(qp.S) + rank(qp.A) == n4
    assert Q @ qp.S == qp.S
    if fleet.braiding(name).cls == 'hecke':
        assert ((Q - eye) @ (Q + eye * q ** 2) @ (Q + eye * q ** -2)).is_zero()
    else:
        assert Q == fleet.end(name).matrix
        assert (Q @ Q).is_identity()
        assert qp.S == (eye + Q) * (ONE / 2)


def test_q_is_conjugation():
    # Q on the coordinates of L_1b L_2b realizes X -> R^-1 X R
    from qlab.schur_weyl import product_coordinates
    r = fleet.braiding('std2')
    T, T2 = product_coordinates(r)
    assert T @ fleet.qp('std2').Q.T == T2
