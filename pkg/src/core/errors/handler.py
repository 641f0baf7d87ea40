"""
Error handler for the application.
"""

import traceback
from typing import Any, Dict, Optional

from src.core.errors.exceptions import GalrepError, InternalError
from src.utils.logging import get_logger

logger = get_logger(__name__)


class ErrorHandler:
    """
    Error handler for the application.

    Converts arbitrary exceptions to GalrepError instances and formats them
    for the command line.
    """

    @staticmethod
    def handle_general_error(
        error: Exception,
        context: Optional[Dict[str, Any]] = None
    ) -> GalrepError:
        """
        Handle a general error.

        Args:
            error: The original exception
            context: Additional context information

        Returns:
            A GalrepError instance
        """
        context = context or {}

        if isinstance(error, GalrepError):
            return error

        logger.error(f"Unhandled error: {error}")
        logger.error(traceback.format_exc())

        return InternalError(
            message=f"Internal error: {error}",
            details={"original_error": str(error), **context}
        )

    @staticmethod
    def format_for_cli(error: GalrepError) -> str:
        """单行错误信息，写到 stderr"""
        return f"error[{error.error_code}]: {error.message}"

    @staticmethod
    def log_error(
        error: Exception,
        context: Optional[Dict[str, Any]] = None
    ) -> None:
        """
        Log an error with context.

        Args:
            error: The error to log
            context: Additional context information
        """
        context = context or {}

        if isinstance(error, GalrepError):
            log_context = {
                "error_type": error.__class__.__name__,
                "error_code": error.error_code,
                "exit_code": error.exit_code,
                **error.details,
                **context
            }
            logger.error(f"{error.message} {log_context}")
        else:
            logger.error(f"Error: {error} {{'error_type': '{error.__class__.__name__}'}}")
            logger.error(traceback.format_exc())
