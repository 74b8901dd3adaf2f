"""Exact truncated hypergeometric functions, multiple zeta values and the
identity verification harness."""

from ._core import *  # noqa: F401,F403
from ._core import Error, PoleError, ConfigError, UnknownIdentity  # noqa: F401

__version__ = "0.1.0"
