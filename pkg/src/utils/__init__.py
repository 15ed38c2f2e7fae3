#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Utility module initialization file
"""

from src.utils.file_util import FileUtil
from src.utils.rational_util import RationalUtil
from src.utils.elimination import fraction_free_determinant

__all__ = [
    'FileUtil',
    'RationalUtil',
    'fraction_free_determinant'
]
