"""
Service factory for dependency injection and service management.
"""

from typing import Optional

from src.dao.golden_dao import GoldenDAO
from src.dao.table_dao import TableDAO
from src.service.bounds_service import BoundsService
from src.service.fixpoint_service import FixpointService
from src.service.gf2rep_service import GF2RepService
from src.service.groups_service import GroupsService
from src.service.odlyzko_service import OdlyzkoService
from src.service.orders_service import OrdersService
from src.service.reproduce_service import ReproduceService
from src.service.sieve_service import SieveService


class ServiceFactory:
    """Factory class for creating and sharing services; tables and subgroup classes are cached per instance."""

    _instance: Optional['ServiceFactory'] = None
    _services: dict = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not hasattr(self, '_initialized'):
            self._initialized = True
            self._services = {}

    def _get(self, key: str, build):
        if key not in self._services:
            self._services[key] = build()
        return self._services[key]

    def get_odlyzko_service(self) -> OdlyzkoService:
        return self._get('odlyzko_service', lambda: OdlyzkoService(TableDAO()))

    def get_bounds_service(self) -> BoundsService:
        return self._get('bounds_service', lambda: BoundsService(self.get_odlyzko_service()))

    def get_sieve_service(self) -> SieveService:
        return self._get('sieve_service', SieveService)

    def get_fixpoint_service(self) -> FixpointService:
        return self._get('fixpoint_service', lambda: FixpointService(
            bounds_service=self.get_bounds_service(),
            odlyzko_service=self.get_odlyzko_service(),
            sieve_service=self.get_sieve_service(),
        ))

    def get_groups_service(self) -> GroupsService:
        return self._get('groups_service', GroupsService)

    def get_gf2rep_service(self) -> GF2RepService:
        return self._get('gf2rep_service', lambda: GF2RepService(self.get_groups_service()))

    def get_orders_service(self) -> OrdersService:
        return self._get('orders_service', OrdersService)

    def get_reproduce_service(self) -> ReproduceService:
        return self._get('reproduce_service', lambda: ReproduceService(
            fixpoint_service=self.get_fixpoint_service(),
            gf2rep_service=self.get_gf2rep_service(),
            golden_dao=GoldenDAO(),
        ))

    def reset(self):
        """Reset all cached services."""
        self._services.clear()


def get_service_factory() -> ServiceFactory:
    return ServiceFactory()
