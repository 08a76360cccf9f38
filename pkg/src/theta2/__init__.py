"""Symmetric determinantal representations of plane curves in characteristic two."""

from .fields import GaloisField, InseparableExtension, field_new
from .funcfield import (LaurentSeries, Place, Poly, RatFunc, RationalFunctionField, expand_at,
                        is_square_global, is_square_local, places_up_to, ratfunc_field)
from .forms import Equivalence, LinearPencil, TernaryForm, apply_equivalence, det, is_smooth
from .parser import ParseError, parse_element, parse_field, parse_form
from .conics import Conic, conic_sdr, find_local_point, find_point, inseparable_point
from .cubics import (CurvePoint, HesseCubic, WeierstrassCurve, hesse_jacobian,
                     hesse_local_global_report, hesse_sdr, two_torsion)
from .hassewitt import hw_matrix, is_ordinary, p_rank, zeta_p_rank
from .census import enumerate_symmetric_pencils, sdr_census

__version__ = "0.1.0"
