"""
Run result helpers.
"""

from .results import Results

__all__ = ['Results']
