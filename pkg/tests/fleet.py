"""Cached fleet objects shared across test modules."""

from functools import lru_cache

from qlab.braidings import bc_data, end_braiding, extend_to_dual, flip, standard_a_series, super_flip
from qlab.mrea import covector_rep, relation_set, tensor_rep, vector_rep
from qlab.qlie import bracket_tensor
from qlab.schur_weyl import q_projectors, young_projectors

FLEET = ['flip2', 'flip3', 'sflip11', 'sflip21', 'std2', 'std3']
HECKE = ['std2', 'std3']
INVOLUTIVE = ['flip2', 'flip3', 'sflip11', 'sflip21']

_BUILD = {
    'flip2': lambda: flip(2),
    'flip3': lambda: flip(3),
    'sflip11': lambda: super_flip(1, 1),
    'sflip21': lambda: super_flip(2, 1),
    'std2': lambda: standard_a_series(2),
    'std3': lambda: standard_a_series(3),
}


@lru_cache(maxsize=None)
def braiding(name):
    return _BUILD[name]()


@lru_cache(maxsize=None)
def skew(name):
    return bc_data(braiding(name))


@lru_cache(maxsize=None)
def ext(name):
    return extend_to_dual(braiding(name), skew(name))


@lru_cache(maxsize=None)
def end(name):
    return end_braiding(ext(name))


@lru_cache(maxsize=None)
def rels(name):
    return relation_set(braiding(name))


@lru_cache(maxsize=None)
def qp(name):
    return q_projectors(ext(name))


@lru_cache(maxsize=None)
def bd(name):
    return bracket_tensor(braiding(name), qp(name))


@lru_cache(maxsize=None)
def bank(name, k):
    return young_projectors(braiding(name), k)


@lru_cache(maxsize=None)
def v(name):
    return vector_rep(braiding(name), skew(name))


@lru_cache(maxsize=None)
def vd(name):
    return covector_rep(braiding(name), skew(name))


@lru_cache(maxsize=None)
def vvd(name):
    return tensor_rep(v(name), vd(name), ext(name))


@lru_cache(maxsize=None)
def vv(name):
    return tensor_rep(v(name), v(name), ext(name))
