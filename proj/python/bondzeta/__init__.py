"""Bond scattering matrices, secular determinants and zeta functions of
Hermitian-weighted graphs and their regular covers."""

from ._core import *  # noqa: F401,F403
from ._core import Error, InputError, Instance, Report

__all__ = [name for name in dir() if not name.startswith("_")]
