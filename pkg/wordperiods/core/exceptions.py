"""
Exception Definitions
Every error carries the process exit code the CLI reports for it.
"""


class PeriodsError(Exception):
    """Base exception for wordperiods errors"""
    exit_code = 1


class ValidationError(PeriodsError):
    """Malformed input (period list, word, alphabet size)"""
    exit_code = 2


class BudgetExceededError(PeriodsError):
    """Exhaustive enumeration larger than the configured guard"""
    exit_code = 3


class PrecisionError(PeriodsError):
    """Requested precision not reachable within the compute budget"""
    exit_code = 4


class SeriesError(PrecisionError):
    """Series expansion stopped alternating or decreasing"""
    pass
