"""Utility package - common helper classes."""

from .data_struct_util import DataStructUtil
from .math_util import MathUtil
from .spinner import ProgressSpinner
from .text_util import TextUtil
from .version import get_version

__all__ = ['DataStructUtil', 'MathUtil', 'ProgressSpinner', 'TextUtil', 'get_version']
