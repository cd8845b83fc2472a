"""Finite distributive lattices, subordinations and their dual spaces."""

from ._proxkit import *  # noqa: F401,F403
from ._proxkit import __doc__  # noqa: F401
