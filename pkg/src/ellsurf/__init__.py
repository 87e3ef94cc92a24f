"""Root numbers and geometry of isotrivial rational elliptic surfaces."""

from .arith import factorize, is_prime, kronecker, padic_split, sigma_invariant
from .classify import ConstancyVerdict, SurfaceJ0, SurfaceJ1728, classify, classify_j0, classify_j1728
from .local_root import Family, Mode, global_root, root_number
from .poly import Poly
from .scanner import ScanReport, cross_validate, scan
from .weierstrass import Point, WeierstrassCurve

__version__ = "0.1.0"

__all__ = [
    "ConstancyVerdict",
    "Family",
    "Mode",
    "Point",
    "Poly",
    "ScanReport",
    "SurfaceJ0",
    "SurfaceJ1728",
    "WeierstrassCurve",
    "classify",
    "classify_j0",
    "classify_j1728",
    "cross_validate",
    "factorize",
    "global_root",
    "is_prime",
    "kronecker",
    "padic_split",
    "root_number",
    "scan",
    "sigma_invariant",
]
