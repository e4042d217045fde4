import dataclasses

import pytest

import fleet
from qlab.exact import Matrix, ONE, ZERO, kronecker, omega, q
from qlab.mrea import GeneratorRep, RepresentationError, check_representation, ell_element
from qlab.sl_reduction import (SlUnavailable, ell_center_check, restricted_bracket_jacobi, sl_adjoint_rep,
                               sl_present, sl_reduce_rep, z_twist)

SL_FLEET = ['flip2', 'flip3', 'sflip21', 'std2', 'std3']


def slp(name):
    return sl_present(fleet.rels(name), fleet.skew(name))


@pytest.mark.parametrize('name', SL_FLEET)
def test_back_substitution(name):
    p = slp(name)
    assert p.equivalent and p.trace_vanishes


def test_super_flip_refused():
    with pytest.raises(SlUnavailable, match='sl-reduction unavailable'):
        slp('sflip11')
    with pytest.raises(SlUnavailable):
        sl_reduce_rep(fleet.v('sflip11'), fleet.skew('sflip11'))


def test_mixed_system_shape():
    p = slp('std2')
    n2 = 4
    # N^4 relations from the matrix identity plus the N^2 commutators with ell
    assert len(p.mixed) == n2 * n2 + n2
    ell_terms = [w for poly in p.mixed[:n2 * n2] for w in poly if p.ell_id in w]
    assert ell_terms and all(len(w) == 2 and w[0] == p.ell_id for w in ell_terms)
    assert p.trace_constraint == ell_element(2, fleet.skew('std2').C)


def test_flip_quotient_is_classical():
    p = slp('flip2')
    assert p.quotient.stacked() == fleet.rels('flip2').stacked()
    assert p.trace_constraint == {(0,): ONE, (3,): ONE}
    assert p.omega == ZERO


@pytest.mark.parametrize('name', SL_FLEET)
def test_ell_central(name):
    reps = [fleet.v(name), fleet.vd(name)]
    if name in fleet.HECKE:
        reps.append(fleet.vvd(name))
    rep = ell_center_check(fleet.rels(name), fleet.skew(name), reps)
    assert rep.passed, rep.failures()


def test_ell_central_detects_missing_relations():
    rels = fleet.rels('std2')
    rows = list(range(1, rels.count, 2))
    cut = dataclasses.replace(rels, quadratic=rels.quadratic.submatrix(rows, list(range(rels.quadratic.cols))),
                              linear=rels.linear.submatrix(rows, list(range(rels.linear.cols))))
    rep = ell_center_check(cut, fleet.skew('std2'))
    assert not rep.passed
    assert rep.failures()[0][1] is not None


@pytest.mark.parametrize('name', SL_FLEET)
def test_sl_adjoint_identities(name):
    sa = sl_adjoint_rep(fleet.bd(name), slp(name))
    assert sa.report.passed, sa.report.failures()
    assert len(sa.report.entries) == 4


def test_flip_sl_adjoint_is_classical():
    sa = sl_adjoint_rep(fleet.bd('flip2'), slp('flip2'))
    assert sa.ell_image.is_zero()
    assert sa.coincides_with_restricted_bracket


def test_restricted_bracket_coincidence():
    assert not sl_adjoint_rep(fleet.bd('std2'), slp('std2')).coincides_with_restricted_bracket
    # same comparison after specializing q = 1
    p = slp('std2')
    bk = fleet.bd('std2').bracket
    action = bk @ kronecker(p.phi, p.phi)
    naive = p.phi @ bk
    assert action != naive
    assert action.evaluate_at(1) == naive.evaluate_at(1)


@pytest.mark.parametrize('name', fleet.HECKE)
def test_restricted_bracket_breaks_q_jacobi(name):
    w = restricted_bracket_jacobi(fleet.bd(name), slp(name))
    assert w is not None


@pytest.mark.xfail(strict=True, reason='q-Jacobi fails for the bracket restricted to span(f)')
def test_restricted_bracket_q_jacobi_expected_failure():
    assert restricted_bracket_jacobi(fleet.bd('std2'), slp('std2')) is None


def test_restricted_bracket_jacobi_classical():
    assert restricted_bracket_jacobi(fleet.bd('flip2'), slp('flip2')) is None


def test_identity_twist():
    rho = fleet.v('std2')
    tw = z_twist(rho, 1, fleet.braiding('std2'))
    assert tw.images == rho.images


@pytest.mark.parametrize('name', fleet.HECKE)
@pytest.mark.parametrize('z', [ONE, q, 2])
def test_twists(name, z):
    r = fleet.braiding(name)
    for rho in (fleet.v(name), fleet.vd(name), fleet.vvd(name)):
        tw = z_twist(rho, z, r, fleet.skew(name), fleet.rels(name))
        assert check_representation(tw.rep, fleet.rels(name)) is None
    # V and V* are irreducible, so ell stays scalar after twisting
    for rho in (fleet.v(name), fleet.vd(name)):
        assert z_twist(rho, z, r, fleet.skew(name)).rep.chi is not None


def test_twist_reaches_zero_ell():
    name = 'std2'
    sk = fleet.skew(name)
    rho = fleet.v(name)
    xi = ONE - omega * sk.trC.inverse() * rho.chi
    tw = z_twist(rho, xi.inverse(), fleet.braiding(name), sk, fleet.rels(name))
    assert tw.rep.chi == ZERO


def test_involutive_twist_only_trivial():
    with pytest.raises(RepresentationError):
        z_twist(fleet.v('flip2'), q, fleet.braiding('flip2'))


@pytest.mark.parametrize('name', SL_FLEET)
def test_reduction(name):
    p = slp(name)
    sk = fleet.skew(name)
    for rho in (fleet.v(name), fleet.vd(name)):
        red = sl_reduce_rep(rho, sk, p)
        assert check_representation(red, p.quotient) is None
        assert red.ell_image(sk.C).is_zero()


def test_reduction_std2_chi():
    assert fleet.v('std2').chi == q ** -4
    red = sl_reduce_rep(fleet.v('std2'), fleet.skew('std2'), slp('std2'))
    assert red.chi == ZERO


def test_flip_reduction_subtracts_trace():
    red = sl_reduce_rep(fleet.v('flip2'), fleet.skew('flip2'), slp('flip2'))
    eye = Matrix.identity(2)
    for g, m in enumerate(fleet.v('flip2').images):
        expect = m - eye * (ONE / 2) if g in (0, 3) else m
        assert red.images[g] == expect


def test_singular_reduction():
    sk = fleet.skew('std2')
    rho = fleet.v('std2')
    chi = sk.trC / omega
    fake = GeneratorRep(rho.n, rho.dim, rho.images, chi, True, 'fake')
    with pytest.raises(RepresentationError, match='reduction singular'):
        sl_reduce_rep(fake, sk, slp('std2'))


def test_mismatched_chi_rejected():
    rho = fleet.v('std2')
    fake = GeneratorRep(rho.n, rho.dim, rho.images, ONE, True, 'fake')
    with pytest.raises(RepresentationError):
        sl_reduce_rep(fake, fleet.skew('std2'), slp('std2'))
