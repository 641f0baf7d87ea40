import os
import sys

import pytest

# 自动将项目根目录加入sys.path，确保pytest能import src.xxx
ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, ROOT)

from src.dao.table_dao import TableDAO  # noqa: E402
from src.service.bounds_service import BoundsService  # noqa: E402
from src.service.fixpoint_service import FixpointService  # noqa: E402
from src.service.groups_service import GroupsService  # noqa: E402
from src.service.odlyzko_service import OdlyzkoService  # noqa: E402
from src.service.sieve_service import SieveService  # noqa: E402

TABLES_DIR = os.path.join(ROOT, 'config', 'tables')
GOLDEN_DIR = os.path.join(ROOT, 'config', 'golden')


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    """日志写到临时目录，避免污染仓库下的 logs/"""
    monkeypatch.setenv('GALREP_LOG_DIR', str(tmp_path / 'logs'))
    yield


@pytest.fixture(scope="session")
def odlyzko_service():
    return OdlyzkoService(TableDAO(TABLES_DIR))


@pytest.fixture(scope="session")
def bounds_service(odlyzko_service):
    return BoundsService(odlyzko_service)


@pytest.fixture(scope="session")
def sieve_service():
    return SieveService()


@pytest.fixture(scope="session")
def fixpoint_service(bounds_service, odlyzko_service, sieve_service):
    return FixpointService(bounds_service, odlyzko_service, sieve_service)


@pytest.fixture(scope="session")
def groups_service():
    return GroupsService()


@pytest.fixture(scope="session")
def grh_general(odlyzko_service):
    return odlyzko_service.load_table('grh_general')


@pytest.fixture(scope="session")
def grh_totally_real(odlyzko_service):
    return odlyzko_service.load_table('grh_totally_real')


@pytest.fixture(scope="session")
def unconditional_general(odlyzko_service):
    return odlyzko_service.load_table('unconditional_general')
