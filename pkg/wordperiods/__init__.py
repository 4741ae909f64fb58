"""wordperiods
Exact counting of words by period/border structure and high-precision
evaluation of the limiting border-length distribution.
"""

__version__ = "0.1.0"
