"""Cached surfaces shared across test modules."""
from functools import lru_cache

from tropfloor.floors import build_Xd_dminus1, surface_from_floor_plan, synth_floor_plan
from tropfloor.polyhedral import compactify, hypersurface, projective_space
from tropfloor.troppoly import honeycomb_height, polynomial_from_heights

SEED = 0


@lru_cache(maxsize=None)
def plan(d, seed=SEED):
    return synth_floor_plan(d, seed)


@lru_cache(maxsize=None)
def surface(d, seed=SEED):
    return surface_from_floor_plan(plan(d, seed))[1]


@lru_cache(maxsize=None)
def floor_pair(d, seed=SEED):
    P = plan(d, seed)
    return build_Xd_dminus1(P.curves[d - 1].poly, P.curves[d - 2].poly if d > 1 else None)


@lru_cache(maxsize=None)
def plane_curve(d):
    f = polynomial_from_heights(2, d, honeycomb_height)
    return f, compactify(hypersurface(f), projective_space(2))


@lru_cache(maxsize=None)
def honeycomb_surface(d):
    f = polynomial_from_heights(3, d, honeycomb_height)
    return f, compactify(hypersurface(f), projective_space(3))
