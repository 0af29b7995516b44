"""Link invariants from the infinite cyclic cover: eta-functions, derived
invariants and chirality obstructions for two-component links."""

from .laurent import (
    LaurentError,
    LaurentPoly,
    RationalLaurent,
    WSeries,
    alexander_from_conway,
    conway_normalize,
    det_laurent,
    expand_rational_w,
    to_w_basis,
)

__version__ = "0.1.0"

__all__ = [
    "LaurentError",
    "LaurentPoly",
    "RationalLaurent",
    "WSeries",
    "alexander_from_conway",
    "conway_normalize",
    "det_laurent",
    "expand_rational_w",
    "to_w_basis",
    "__version__",
]
