"""
Exception classes for the error handling framework.
"""

from typing import Dict, Any, Optional


class GalrepError(Exception):
    """Base class for every error raised by the library and the CLI."""

    def __init__(
        self,
        message: str,
        exit_code: int = 1,
        error_code: str = "internal_error",
        details: Optional[Dict[str, Any]] = None
    ):
        """
        Initialize the error.

        Args:
            message: Error message
            exit_code: Process exit code used by the CLI
            error_code: Stable machine-readable error code
            details: Additional error details
        """
        self.message = message
        self.exit_code = exit_code
        self.error_code = error_code
        self.details = details or {}
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the error to a dictionary.

        Returns:
            Dictionary representation of the error
        """
        result = {
            "error": {
                "message": self.message,
                "type": self.error_code
            }
        }

        if self.details:
            result["error"]["details"] = self.details

        return result


class ConfigurationError(GalrepError):
    """Error related to configuration."""

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        error_details = details or {}
        if config_key:
            error_details["config_key"] = config_key

        super().__init__(
            message=message,
            error_code="configuration_error",
            details=error_details
        )


class ValidationError(GalrepError):
    """输入参数、分拆或预设不合法"""

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        error_details = details or {}
        if field:
            error_details["field"] = field

        super().__init__(
            message=message,
            error_code="validation_error",
            details=error_details
        )


class ArithmeticOverflowError(GalrepError):
    """Exact value outside the configured integer width or power range."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code="arithmetic_overflow",
            details=details
        )


class NoAdmissibleProfileError(GalrepError):
    """v_p(n) is smaller than the requested p-length."""

    def __init__(self, n: int, p: int, length: int, valuation: int):
        super().__init__(
            message=f"no admissible profile: v_{p}({n}) = {valuation} < {length}",
            error_code="no_admissible_profile",
            details={"n": n, "p": p, "p_length": length, "valuation": valuation}
        )


class CandidateSetExhaustedError(GalrepError):
    """Minimization requested over an empty degree list."""

    def __init__(self, message: str = "candidate set exhausted"):
        super().__init__(message=message, error_code="candidate_set_exhausted")


class TableLoadError(GalrepError):
    """判别式表文件无法解析或违反单调性"""

    def __init__(
        self,
        message: str,
        source: Optional[str] = None,
        line_number: Optional[int] = None,
        row: Optional[str] = None
    ):
        details: Dict[str, Any] = {}
        if source:
            details["source"] = source
        if line_number is not None:
            details["line"] = line_number
        if row is not None:
            details["row"] = row

        location = f" (line {line_number})" if line_number is not None else ""
        super().__init__(
            message=f"{message}{location}",
            error_code="table_load_error",
            details=details
        )


class TableInsufficientError(GalrepError):
    """The queried bound lies above every row of the table."""

    def __init__(self, rd_upper: str, table: str):
        super().__init__(
            message=f"table {table} does not reach root discriminant {rd_upper}",
            error_code="table_insufficient",
            details={"rd_upper": rd_upper, "table": table}
        )


class NotAPGroupError(GalrepError):
    def __init__(self, order: int, p: int):
        super().__init__(
            message=f"group of order {order} is not a {p}-group",
            error_code="not_a_p_group",
            details={"order": order, "p": p}
        )


class GroupTooLargeError(GalrepError):
    """Degree or order limit exceeded."""

    def __init__(self, message: str, limit: int, actual: int):
        super().__init__(
            message=message,
            error_code="group_too_large",
            details={"limit": limit, "actual": actual}
        )


class MeatAxeError(GalrepError):
    """
    随机 MeatAxe 在尝试上限内没有找到真子模或不可约证明。

    建议换一个种子重新运行；``suggested_seed`` 是确定性的下一个候选种子。
    """

    def __init__(self, message: str, seed: int, dimension: int):
        self.seed = seed
        self.suggested_seed = seed + 1
        super().__init__(
            message=f"{message}; rerun with --seed {self.suggested_seed}",
            error_code="meataxe_iteration_cap",
            details={"seed": seed, "suggested_seed": self.suggested_seed, "dimension": dimension}
        )


class GoldenMismatchError(GalrepError):
    """Regenerated output differs from the bundled golden file."""

    def __init__(self, target: str, line: int, expected: str, actual: str):
        super().__init__(
            message=f"{target} differs from golden at line {line}: expected {expected!r}, got {actual!r}",
            error_code="golden_mismatch",
            details={"target": target, "line": line, "expected": expected, "actual": actual}
        )


class InternalError(GalrepError):
    """Unexpected failure wrapped by the error handler."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code="internal_error",
            details=details
        )
