"""Exact convex generalized differentiation over rational polyhedra.

All arithmetic is exact (``fractions.Fraction``).  The LP kernel is a compiled
extension when available and a pure-Python module otherwise; set
``POLYCAL_PURE=1`` to force the fallback.  ``polycal.lp.KERNEL`` reports which
one is active.
"""
from .cones import (ConeGen, SeparationCertificate, cone_hrep, cone_member, cone_sum, cones_equal,
                    nc_oracle, normal_cone, proper_separation, verify_separation)
from .errors import (CapsExceeded, DimensionMismatch, EmptySet, FormatError, ImproperValue,
                     MalformedInstance, NegativeScalar, NotInDomain, NotInGraph, PointNotInSet,
                     PolycalError)
from .formats import CheckDoc, canonical, parse, serialize
from .functions import (INF, MaxAffineFn, epigraph, eval_fn, fn_sum, scaled_subdiff, sd_oracle,
                        singular_subdiff, subdiff, sublevel_set)
from .lp import KERNEL, LPResult, lp_solve
from .maps import (CoderivResult, OptimalValueFn, SVMap, argmin_set, coderiv_chain, coderiv_union_over,
                   coderivative, compose, decomposition_set, dom, epigraphical, gem, intermediate_set,
                   inverse, map_sum, optimal_value, preimage, rge, value)
from .polyhedra import (AffineSet, HPoly, affine_hull, canonicalize, contains, disjunctive_hull,
                        eliminate, intersect, is_empty, linear_image, minkowski_sum, product,
                        ri_intersect_witness, ri_member, ri_point, ri_segment_oracle, set_equal)
from .rational import parse_rat, rat_str

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
