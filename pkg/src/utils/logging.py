import logging
import os
from datetime import datetime
from logging.handlers import RotatingFileHandler
from typing import Any, Dict, Optional

from src.config import get_log_dir, get_log_level

LOG_NAME = "galrep"


def setup_file_logging(logs_dir: Optional[str] = None, level: Optional[str] = None):
    """设置文件日志记录（不向 stdout 输出任何日志）"""
    logs_dir = logs_dir or get_log_dir()
    level_value = getattr(logging, (level or get_log_level()).upper(), logging.INFO)
    os.makedirs(logs_dir, exist_ok=True)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    # 按大小轮转
    file_handler = RotatingFileHandler(
        os.path.join(logs_dir, f'{LOG_NAME}.log'),
        maxBytes=10*1024*1024,  # 10MB
        backupCount=5,
        encoding='utf-8'
    )
    file_handler.setFormatter(formatter)
    file_handler.setLevel(level_value)

    # 每日日志文件
    daily_log_file = os.path.join(logs_dir, f'{LOG_NAME}-{datetime.now().strftime("%Y-%m-%d")}.log')
    daily_handler = logging.FileHandler(daily_log_file, encoding='utf-8')
    daily_handler.setFormatter(formatter)
    daily_handler.setLevel(level_value)

    root_logger = logging.getLogger()
    root_logger.setLevel(level_value)

    # 避免重复添加处理器
    if not any(isinstance(h, RotatingFileHandler) for h in root_logger.handlers):
        root_logger.addHandler(file_handler)
    else:
        file_handler.close()
    if not any(isinstance(h, logging.FileHandler) and f'{LOG_NAME}-' in h.baseFilename for h in root_logger.handlers):
        root_logger.addHandler(daily_handler)
    else:
        daily_handler.close()

    return root_logger


def get_logger(name):
    """获取logger实例"""
    return logging.getLogger(name)


def log_computation(operation: str, params: Dict[str, Any], result: Any = None,
                    error_message: Optional[str] = None, elapsed: float = 0.0):
    """记录一次顶层计算（迭代降界、chop、S6 搜索）"""
    computation_logger = get_logger('computations')

    log_entry = {
        'timestamp': datetime.now().isoformat(),
        'operation': operation,
        'params': params,
        'elapsed': round(elapsed, 6),
    }
    if result is not None:
        log_entry['result'] = result

    if error_message:
        log_entry['error'] = error_message
        computation_logger.error(f"计算失败: {log_entry}")
    else:
        computation_logger.info(f"计算完成: {log_entry}")
    return log_entry
