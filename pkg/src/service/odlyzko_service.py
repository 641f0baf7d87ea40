"""
Odlyzko 判别式下界表：解析、校验，以及根判别式上界 → 度数上界的换算。
"""

import re
import threading
from typing import Dict, List, Optional

from src.core.errors.exceptions import (
    ConfigurationError,
    TableInsufficientError,
    TableLoadError,
    ValidationError,
)
from src.core.exact import Decimal3
from src.dao.table_dao import TableDAO
from src.models.table import DiscriminantTable, TableRow
from src.utils.logging import get_logger

logger = get_logger(__name__)

_HEADER_RE = re.compile(r"^#grh=([01]) totally_real=([01])$")
_ROW_RE = re.compile(r"^(\d+),(\d+(?:\.\d+)?)$")

BUNDLED_TABLES = {
    (False, False): "unconditional_general",
    (True, False): "grh_general",
    (True, True): "grh_totally_real",
}


class OdlyzkoService:
    """判别式表服务，按表名缓存已加载的表"""

    def __init__(self, table_dao: Optional[TableDAO] = None):
        self.table_dao = table_dao or TableDAO()
        self._cache: Dict[str, DiscriminantTable] = {}
        self._lock = threading.Lock()

    def parse_table(self, text: str, name: str = "table") -> DiscriminantTable:
        """
        Parse the table file format: a ``#grh=<0|1> totally_real=<0|1>`` header
        followed by ``degree_threshold,rd_lower`` rows. Trailing whitespace is
        ignored; an rd value with more than three fractional digits is a load
        error on its line.
        """
        lines = [line.rstrip() for line in text.splitlines()]
        if not lines:
            raise TableLoadError("empty table file", source=name, line_number=1)

        header = _HEADER_RE.match(lines[0])
        if not header:
            raise TableLoadError("malformed header", source=name, line_number=1, row=lines[0])

        rows: List[TableRow] = []
        for line_number, line in enumerate(lines[1:], start=2):
            match = _ROW_RE.match(line)
            if not match:
                raise TableLoadError("malformed row", source=name, line_number=line_number, row=line)
            threshold = int(match.group(1))
            try:
                rd_lower = Decimal3.parse(match.group(2))
            except ValidationError as e:
                raise TableLoadError(e.message, source=name, line_number=line_number, row=line) from e
            if threshold < 1 or rd_lower < 1:
                raise TableLoadError("threshold and bound must be >= 1", source=name,
                                     line_number=line_number, row=line)
            if rows and threshold <= rows[-1].degree_threshold:
                raise TableLoadError("degree thresholds must increase strictly", source=name,
                                     line_number=line_number, row=line)
            if rows and rd_lower < rows[-1].rd_lower:
                raise TableLoadError("root-discriminant bounds must not decrease", source=name,
                                     line_number=line_number, row=line)
            rows.append(TableRow(degree_threshold=threshold, rd_lower=rd_lower))

        if not rows:
            raise TableLoadError("table has no rows", source=name, line_number=len(lines))

        return DiscriminantTable(
            name=name,
            grh=header.group(1) == "1",
            totally_real=header.group(2) == "1",
            rows=tuple(rows),
        )

    def load_table(self, source: str) -> DiscriminantTable:
        """Load a bundled table by name or any table file by path."""
        with self._lock:
            if source in self._cache:
                return self._cache[source]
            name, text = self.table_dao.read_table_text(source)
            table = self.parse_table(text, name)
            logger.info(f"加载判别式表 {name}: {len(table.rows)} 行")
            self._cache[source] = table
            return table

    def table_for_flags(self, grh: bool, totally_real: bool) -> DiscriminantTable:
        name = BUNDLED_TABLES.get((grh, totally_real))
        if name is None:
            raise ConfigurationError(
                "no unconditional totally-real table is bundled", config_key="TABLES_DIR"
            )
        table = self.load_table(name)
        if (table.grh, table.totally_real) != (grh, totally_real):
            raise ConfigurationError(f"table {name} header does not match its name", config_key="TABLES_DIR")
        return table

    def max_degree(self, table: DiscriminantTable, rd_upper: Decimal3) -> int:
        """
        Largest degree not excluded by ``rd_upper``.

        A degree n is excluded when the bound in force at n is >= rd_upper, so
        the answer is (threshold of the first such row) - 1.
        """
        if rd_upper < 1:
            raise ValidationError(f"root discriminant bound must be >= 1, got {rd_upper}", field="rd_upper")
        for row in table.rows:
            if row.rd_lower >= rd_upper:
                return row.degree_threshold - 1
        raise TableInsufficientError(str(rd_upper), table.name)

    def min_root_disc(self, table: DiscriminantTable, degree: int) -> Decimal3:
        """Bound in force for fields of degree >= ``degree`` (1.000 when no row applies)."""
        if degree < 1:
            raise ValidationError(f"degree must be >= 1, got {degree}", field="degree")
        bound = Decimal3(1000)
        for row in table.rows:
            if row.degree_threshold > degree:
                break
            bound = row.rd_lower
        return bound

    def describe(self, table: DiscriminantTable) -> List[str]:
        return [f"{row.degree_threshold},{row.rd_lower}" for row in table.rows]
