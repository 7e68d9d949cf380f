"""High-precision verification of Ramanujan-type identities for zeta values."""
from .mpcore import BigComplex, PrecisionContext, SeriesSum

__version__ = "0.1.0"
__all__ = ["BigComplex", "PrecisionContext", "SeriesSum", "__version__"]
