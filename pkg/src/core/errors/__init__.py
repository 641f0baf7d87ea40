"""
Error handling framework for the application.
"""

from src.core.errors.exceptions import (
    GalrepError,
    ConfigurationError,
    ValidationError,
    ArithmeticOverflowError,
    NoAdmissibleProfileError,
    CandidateSetExhaustedError,
    TableLoadError,
    TableInsufficientError,
    NotAPGroupError,
    GroupTooLargeError,
    MeatAxeError,
    GoldenMismatchError,
    InternalError
)

from src.core.errors.handler import ErrorHandler

__all__ = [
    'GalrepError',
    'ConfigurationError',
    'ValidationError',
    'ArithmeticOverflowError',
    'NoAdmissibleProfileError',
    'CandidateSetExhaustedError',
    'TableLoadError',
    'TableInsufficientError',
    'NotAPGroupError',
    'GroupTooLargeError',
    'MeatAxeError',
    'GoldenMismatchError',
    'InternalError',
    'ErrorHandler'
]
