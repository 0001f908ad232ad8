"""Exact moment/cumulant calculus for rectangular finite free probability."""
from .errors import GuardError, PochhammerZeroError, RectcumError, SeriesDomainError
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "GuardError", "PochhammerZeroError", "RectcumError", "SeriesDomainError", "__version__"]
