import os
from typing import List

from src.config import get_golden_dir
from src.core.errors.exceptions import TableLoadError
from src.schemas import AppendixGolden
from src.utils.logging import get_logger

logger = get_logger(__name__)

TEXT_TARGETS = ("table1", "table2", "table3")
APPENDIX_FILE = "appendix_a2.json"


class GoldenDAO:
    """复现目标的转录文件访问对象"""

    def __init__(self, golden_dir: str = None):
        self._golden_dir = golden_dir

    @property
    def golden_dir(self) -> str:
        return self._golden_dir or get_golden_dir()

    def _read(self, filename: str) -> str:
        path = os.path.join(self.golden_dir, filename)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return f.read()
        except OSError as e:
            logger.error(f"读取转录文件失败: {path}: {e}")
            raise TableLoadError(f"cannot read golden file {filename}: {e}", source=path) from e

    def read_table_lines(self, target: str) -> List[str]:
        return self._read(f"{target}.txt").splitlines()

    def read_appendix(self) -> AppendixGolden:
        return AppendixGolden.model_validate_json(self._read(APPENDIX_FILE))
