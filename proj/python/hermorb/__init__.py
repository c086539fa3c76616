import json

from . import _core

__version__ = _core.__version__

in_tensor_semigroup = _core.in_tensor_semigroup
product_contains = _core.product_contains
gamma_module = _core.gamma_module
verify_gamma_product = _core.verify_gamma_product


def _case(p=0, q=0, r=-1, s=-1):
    return p, q, r, s


def pairs(g_type, rank):
    return json.loads(_core.pairs_json(g_type, rank))


def orbits(pair, max_params=8):
    return json.loads(_core.orbits_json(pair, max_params))


def triple(orbit_id):
    return json.loads(_core.triple_json(orbit_id))


def semigroup(case, max_degree=4, **params):
    return json.loads(_core.semigroup_json(case, *_case(**params), max_degree))


def normality(case="all", max_rank=8, **params):
    if case == "all":
        return json.loads(_core.normality_all_json(max_rank))
    return json.loads(_core.normality_json(case, *_case(**params)))


def cg_verify(max_entry=4):
    return json.loads(_core.cg_verify_json(max_entry))


def report_all(max_params=8, max_degree=4, max_entry=4):
    return json.loads(_core.report_all_json(max_params, max_degree, max_entry))


def spherical_system(case, **params):
    return json.loads(_core.system_json(case, *_case(**params)))


def leq_sigma(case, D, E, **params):
    return _core.leq_sigma(case, *_case(**params), list(D), list(E))


def is_minuscule(case, E, **params):
    return _core.is_minuscule(case, *_case(**params), list(E))
