"""Exact arithmetic, Newton polygons and Galois evidence for binary Krawtchouk polynomials."""
from .algebra import (
    INFINITY,
    IntPoly,
    RatPoly,
    depress,
    discriminant,
    int_discriminant,
    primitive_integer_form,
    resultant,
    vp,
    vp_factorial,
)
from .galois import (
    GaloisReport,
    SieveBudget,
    SieveResult,
    Status,
    Verdict,
    disc_valuation_profile,
    galois_scan,
    irreducibility_sieve,
    jordan_range,
    product_of_roots_relation,
)
from .krawtchouk import (
    KrawtchoukSpec,
    UnderlyingSpec,
    descartes_bounds,
    jacobi_at_zero,
    krawtchouk_poly,
    shifted_poly,
    underlying_poly,
)
from .modp import CycleType, PrimePoly, factor_degrees_mod_p, is_squarefree_mod_p, reduce_mod_p
from .newton import (
    NewtonPolygon,
    eisenstein_certificate,
    is_degree_based,
    newton_index,
    newton_polygon,
    np_factor_constraints,
)

__version__ = "0.1.0"
