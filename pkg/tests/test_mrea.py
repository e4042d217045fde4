import pytest

import fleet
import oracle
from qlab.exact import Matrix, ONE, ZERO, kronecker, omega, q
from qlab.exact.linalg import rank
from qlab.mrea import (GeneratorRep, bialgebra_maps, check_representation, degree_cap, eq_form_equivalent,
                       filtered_dimension, in_relation_span, relation_set, restrict_rep, tensor_rep)
from qlab.qlie import adjoint_rep, classical_gl


def unit(n, i, j):
    return Matrix.from_dict(n, n, {(i, j): 1})


def test_flip_relations_are_gl_commutators():
    rels = fleet.rels('flip2')
    n2 = 4
    gl = classical_gl(2)
    # l_a l_b - l_b l_a - [l_a, l_b]
    classical = []
    for a in range(n2):
        for b in range(n2):
            p = {(a, b): ONE}
            p[(b, a)] = p.get((b, a), ZERO) - ONE
            p = {w: v for w, v in p.items() if v}
            for t in range(n2):
                c = gl[t, a * n2 + b]
                if c:
                    p[(t,)] = -c
            classical.append(p)
    for p in classical:
        if p:
            assert in_relation_span(rels, p, 2)
    assert all(in_relation_span(rels, p, 2) for p in rels.polys() if p)
    assert rels.span_rank() == 6


def test_hbar_does_not_change_span_dimension():
    r = fleet.braiding('std2')
    r1 = relation_set(r, ONE)
    r0 = relation_set(r, ZERO)
    assert r1.span_rank() == r0.span_rank()
    assert r0.linear.is_zero() and not r1.linear.is_zero()


@pytest.mark.parametrize('name', fleet.FLEET)
def test_eq_form(name):
    assert eq_form_equivalent(fleet.rels(name))


def test_flip_vector_rep_is_matrix_units():
    rho = fleet.v('flip2')
    for i in range(2):
        for j in range(2):
            assert rho.image(i, j) == unit(2, i, j)
    assert rho.chi == ONE


def test_flip_covector_rep():
    rho = fleet.vd('flip2')
    for i in range(2):
        for j in range(2):
            assert rho.image(i, j) == -unit(2, j, i)


@pytest.mark.parametrize('name', fleet.FLEET)
def test_basic_reps(name):
    rels = fleet.rels(name)
    for rho in (fleet.v(name), fleet.vd(name)):
        assert check_representation(rho, rels) is None
        assert rho.chi is not None
        assert rho.ell_image(fleet.skew(name).C) == Matrix.identity(rho.dim) * rho.chi


@pytest.mark.parametrize('name', fleet.HECKE)
def test_chi_values(name):
    # frozen from multiplying out sum C_j^i rho(l_i^j): q^(-2a) on V, -1 on V*
    a = fleet.skew(name).a
    assert fleet.v(name).chi == q ** (-2 * a)
    assert fleet.vd(name).chi == -ONE


def test_bialgebra_maps():
    d = bialgebra_maps(fleet.braiding('flip2')).delta
    assert all(set(x) == {(g, None), (None, g)} for g, x in enumerate(d))
    m = bialgebra_maps(fleet.braiding('std2'))
    g = 0 * 2 + 1
    assert len(m.delta[g]) == 2 + 2
    assert {k: v for k, v in m.delta[g].items() if None not in k} == {(0, 1): -omega, (1, 3): -omega}
    for g in range(4):
        assert m.counit_left(g) == {g: ONE} == m.counit_right(g)


def test_vvd_is_adjoint():
    assert fleet.vvd('std2').images == adjoint_rep(fleet.bd('std2')).images


def test_flip_vv_is_classical_tensor():
    rho = fleet.vv('flip2')
    eye = Matrix.identity(2)
    for g in range(4):
        m = fleet.v('flip2').images[g]
        assert rho.images[g] == kronecker(m, eye) + kronecker(eye, m)


@pytest.mark.parametrize('name', fleet.HECKE)
def test_hecke_rep_suite(name):
    rels = fleet.rels(name)
    vv = fleet.vv(name)
    vvd = fleet.vvd(name)
    for rho in (vv, vvd, tensor_rep(fleet.vd(name), fleet.v(name), fleet.ext(name))):
        assert check_representation(rho, rels) is None
    bank = fleet.bank(name, 2)
    dims = 0
    for key in bank.keys():
        sub = restrict_rep(vv, bank.projectors[key], check=rels)
        dims += sub.dim
        assert sub.dim == bank.dims[key]
    assert dims == fleet.braiding(name).n ** 2


def test_restrict_std2():
    vv = fleet.vv('std2')
    bank = fleet.bank('std2', 2)
    sym = restrict_rep(vv, bank.projectors[((2,), 1)], check=fleet.rels('std2'))
    assert sym.dim == 3
    anti = restrict_rep(vv, bank.projectors[((1, 1), 1)], check=fleet.rels('std2'))
    assert anti.dim == 1
    assert all(m.is_scalar() is not None for m in anti.images)


def test_check_representation_witness():
    rho = fleet.v('std2')
    imgs = list(rho.images)
    imgs[1] = imgs[1] + Matrix.from_dict(2, 2, {(0, 0): 1})
    bad = GeneratorRep(2, 2, tuple(imgs))
    w = check_representation(bad, fleet.rels('std2'))
    assert w is not None and 'relation' in w


def test_zero_rep_passes():
    zero = GeneratorRep(2, 3, tuple(Matrix.zeros(3) for _ in range(4)))
    assert check_representation(zero, fleet.rels('std2')) is None


def test_rep_json():
    js = fleet.v('std2').to_json()
    assert js['carrier_dim'] == 2 and js['chi'] == 'q^-4'


@pytest.mark.parametrize('name,hbar', [('std2', ONE), ('std2', ZERO), ('flip2', ONE), ('flip2', ZERO)])
def test_filtered_dims(name, hbar):
    rels = relation_set(fleet.braiding(name), hbar)
    assert filtered_dimension(rels, 3).dims == (1, 5, 15, 35)
    assert list(filtered_dimension(rels, 3).dims) == oracle.sym_cumulative(4, 0, 3)


def test_enveloping_gl2_degree2():
    assert filtered_dimension(fleet.rels('flip2'), 2).dims[2] == 15


def test_super_flip_dims_are_super_symmetric():
    dims = filtered_dimension(fleet.rels('sflip11'), 3).dims
    assert list(dims) == oracle.sym_cumulative(2, 2, 3)


def test_degree_cap_env(monkeypatch):
    monkeypatch.setenv('QLAB_DEGREE_CAP', '2')
    assert degree_cap() == 2
    with pytest.raises(ValueError):
        filtered_dimension(fleet.rels('flip2'), 3)
    monkeypatch.delenv('QLAB_DEGREE_CAP')
    assert degree_cap() == 3
