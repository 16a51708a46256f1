"""Surface-link invariants from marked graph diagrams."""

import os

from ._slk import (  # noqa: F401
    Bikei,
    BikeiModule,
    Catalog,
    CatalogEntry,
    Diagram,
    colorings,
    counting_invariant,
    describe_surface,
    enhanced_polynomial,
    enhanced_polynomial_str,
    enumerate_bikei,
    search_modules,
    takasaki,
)

__all__ = [
    "Bikei",
    "BikeiModule",
    "Catalog",
    "CatalogEntry",
    "Diagram",
    "bundled_data_dir",
    "colorings",
    "counting_invariant",
    "describe_surface",
    "enhanced_polynomial",
    "enhanced_polynomial_str",
    "enumerate_bikei",
    "search_modules",
    "takasaki",
]


def bundled_data_dir():
    """Path of the data directory shipped with the package, if present."""
    here = os.path.join(os.path.dirname(__file__), "data")
    return here if os.path.isdir(here) else ""
