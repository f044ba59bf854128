"""Multibeam survey line planning over a planar sloped seabed."""

from ._swathplan import *  # noqa: F401,F403
from ._swathplan import METERS_PER_NAUTICAL_MILE, SurveyError

__all__ = [name for name in dir() if not name.startswith("_")]
