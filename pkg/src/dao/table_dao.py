import os
from typing import List, Optional, Tuple

from src.config import get_tables_dir
from src.core.errors.exceptions import TableLoadError
from src.utils.logging import get_logger

logger = get_logger(__name__)

TABLE_SUFFIX = ".txt"


class TableDAO:
    """判别式下界表文件访问对象"""

    def __init__(self, tables_dir: Optional[str] = None):
        self._tables_dir = tables_dir

    @property
    def tables_dir(self) -> str:
        # 每次读取配置，GALREP_TABLES_DIR 可在运行期覆盖
        return self._tables_dir or get_tables_dir()

    def resolve(self, source: str) -> str:
        """表名（如 grh_general）或文件路径 → 绝对路径"""
        if os.path.sep in source or source.endswith(TABLE_SUFFIX):
            return os.path.abspath(source)
        return os.path.join(self.tables_dir, f"{source}{TABLE_SUFFIX}")

    def list_tables(self) -> List[str]:
        if not os.path.isdir(self.tables_dir):
            return []
        return sorted(
            name[:-len(TABLE_SUFFIX)]
            for name in os.listdir(self.tables_dir)
            if name.endswith(TABLE_SUFFIX)
        )

    def read_table_text(self, source: str) -> Tuple[str, str]:
        """返回 (表名, 文件内容)"""
        path = self.resolve(source)
        name = os.path.basename(path)
        if name.endswith(TABLE_SUFFIX):
            name = name[:-len(TABLE_SUFFIX)]
        try:
            with open(path, 'r', encoding='ascii') as f:
                return name, f.read()
        except (OSError, UnicodeDecodeError) as e:
            logger.error(f"读取判别式表失败: {path}: {e}")
            raise TableLoadError(f"cannot read table {source}: {e}", source=path) from e
