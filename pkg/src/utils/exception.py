import functools

from src.core.errors.exceptions import GalrepError, InternalError


def exception_handler(func):
    """把非 GalrepError 的异常统一包装为 InternalError"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except GalrepError:
            raise
        except Exception as e:
            raise InternalError(f"{func.__name__} failed: {e}", details={"original_error": repr(e)}) from e
    return wrapper
