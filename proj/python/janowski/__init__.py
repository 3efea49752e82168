"""Janowski-type domains: geometry, envelope bounds, radii and special functions."""

import pkgutil

# The compiled module may live in a separate build tree during development.
__path__ = pkgutil.extend_path(__path__, __name__)

from ._janowski import (  # noqa: E402
    JanowskiError,
    K_function,
    K_quadrature,
    alpha_star,
    class_inclusion,
    envelope_bounds,
    eval_powered,
    hyper_3f2,
    image_disk,
    implication_trial,
    macgregor_gamma,
    reciprocal_order_sector,
    sector_image,
    starlike_radius,
    subordination_radius,
    theorems,
)

__version__ = "0.1.0"
