"""Complex Chebyshev polynomials, Widom factors and Faber polynomials."""

from ._complexcheb import (
    CchebError,
    InvalidArgument,
    __version__,
    capacity,
    chebyshev,
    chebyshev_zeros,
    curve_points,
    faber,
    roots,
    widom_table,
)

__all__ = [
    "CchebError",
    "InvalidArgument",
    "capacity",
    "chebyshev",
    "chebyshev_zeros",
    "curve_points",
    "faber",
    "roots",
    "widom_table",
    "__version__",
]
