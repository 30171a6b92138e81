"""Numerical geometry on the extended hyperbolic space S^n_H.

The extended hyperbolic space is the Euclidean unit sphere of Minkowski
space R^{n,1} carrying the singular metric glued from the hyperbolic
metric (inside the light cone) and the negated de Sitter metric
(outside).  Lengths, angles and volumes of figures crossing the ideal
boundary become finite *complex* numbers once the analytic continuation
is fixed; this package fixes it, once and for all, by the clockwise
contour around r = 1, equivalently by the regularization d_eps = 1 - eps*i.

Subpackage map:

* :mod:`exthyp.minkowski` -- bilinear form, point classification, O(n,1)
* :mod:`exthyp.contour`   -- contour quadrature and the eps-oracle
* :mod:`exthyp.metric`    -- complex distance, norm and angle
* :mod:`exthyp.regions`   -- half-space regions and radial profiles
* :mod:`exthyp.measure`   -- the finitely additive complex measure mu
* :mod:`exthyp.polytopes` -- lunes, simplices, closed-form identities
* :mod:`exthyp.cli`       -- the ``xh`` command line front end
"""

from exthyp.config import RunConfig
from exthyp.errors import (
    DivergentMeasure,
    TangencyError,
    UnsupportedConfiguration,
)

__all__ = [
    "RunConfig",
    "DivergentMeasure",
    "TangencyError",
    "UnsupportedConfiguration",
]

__version__ = "0.1.0"
