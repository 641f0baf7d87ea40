"""
GF(2) 上的 MeatAxe：置换模与正则模、合成因子、自同态域次数、绝对不可约判定，
以及在 S6 子群类上搜索具有 4 维绝对不可约模的子群。
"""

import random
import threading
import time
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from src.config import (
    get_default_seed,
    get_meataxe_max_attempts,
    get_meataxe_max_dimension,
    get_meataxe_max_factor_degree,
    get_meataxe_spot_checks,
)
from src.core.errors.exceptions import GroupTooLargeError, MeatAxeError, ValidationError
from src.core.gf2 import poly
from src.core.gf2.matrix import (
    EchelonBasis,
    GF2Matrix,
    iter_bits,
    krylov_minimal_polynomial,
    poly_apply,
    poly_eval,
)
from src.models.gf2_module import CompositionFactor, GF2Module
from src.models.perm_group import PermGroup
from src.schemas import S6Report, S6ReportEntry
from src.service.groups_service import GroupsService
from src.utils.exception import exception_handler
from src.utils.logging import get_logger, log_computation
from src.utils.perm_codec import compose, identity

logger = get_logger(__name__)

# 随机代数元的乘积池中保留的乘积个数
POOL_PRODUCTS = 8


class GF2RepService:
    """MeatAxe over GF(2); every randomized entry point takes an explicit seed."""

    def __init__(
        self,
        groups_service: Optional[GroupsService] = None,
        max_attempts: Optional[int] = None,
        max_factor_degree: Optional[int] = None,
    ):
        self.groups_service = groups_service or GroupsService()
        self.max_attempts = max_attempts or get_meataxe_max_attempts()
        self.max_factor_degree = max_factor_degree or get_meataxe_max_factor_degree()
        self._dims_cache: Dict[Tuple[PermGroup, int], List[Tuple[int, int]]] = {}
        self._lock = threading.Lock()

    # ------------------------------------------------------------------
    # 模的构造
    # ------------------------------------------------------------------

    def permutation_module(self, group: PermGroup) -> GF2Module:
        return GF2Module(
            dimension=group.degree,
            action=tuple(GF2Matrix.from_permutation(g) for g in group.generators),
            group=group,
        )

    def regular_module(self, group: PermGroup) -> GF2Module:
        """Right regular module on the sorted element list: e_x -> e_{x·g}."""
        order = group.order()
        limit = get_meataxe_max_dimension()
        if order > limit:
            raise GroupTooLargeError(f"regular module of order {order} exceeds {limit}", limit=limit, actual=order)
        elements = self.groups_service.elements(group)
        index = {e: i for i, e in enumerate(elements)}
        action = tuple(
            GF2Matrix.from_permutation([index[compose(x, g)] for x in elements])
            for g in group.generators
        )
        return GF2Module(dimension=order, action=action, group=group)

    def spin(self, matrices: Sequence[GF2Matrix], vectors: Sequence[int]) -> EchelonBasis:
        """Smallest subspace containing ``vectors`` and invariant under ``matrices``."""
        basis = EchelonBasis()
        queue = [r for r in (basis.add(v) for v in vectors) if r]
        while queue:
            v = queue.pop()
            for matrix in matrices:
                added = basis.add(matrix.apply(v))
                if added:
                    queue.append(added)
        return basis

    def submodule(self, module: GF2Module, vectors: Sequence[int]) -> GF2Module:
        basis = EchelonBasis.from_vectors(vectors)
        action = []
        for matrix in module.action:
            rows = []
            for b in basis.vectors:
                try:
                    rows.append(basis.coordinates(matrix.apply(b)))
                except ValidationError:
                    raise ValidationError("subspace is not invariant", field="vectors") from None
            action.append(GF2Matrix(len(basis), len(basis), tuple(rows)))
        return GF2Module(dimension=len(basis), action=tuple(action), group=module.group)

    def quotient(self, module: GF2Module, vectors: Sequence[int]) -> GF2Module:
        """Action on V/U with the non-pivot unit vectors as coset representatives."""
        basis = EchelonBasis.from_vectors(vectors)
        pivots = set(basis.pivots)
        complement = [j for j in range(module.dimension) if j not in pivots]
        position = {j: i for i, j in enumerate(complement)}
        action = []
        for matrix in module.action:
            rows = []
            for j in complement:
                image = basis.reduce(matrix.rows[j])
                row = 0
                for bit in iter_bits(image):
                    row |= 1 << position[bit]
                rows.append(row)
            action.append(GF2Matrix(len(complement), len(complement), tuple(rows)))
        return GF2Module(dimension=len(complement), action=tuple(action), group=module.group)

    def heart(self, module: GF2Module) -> GF2Module:
        """Sum-zero subspace modulo the all-ones vector of a permutation module of even degree."""
        n = module.dimension
        if n % 2:
            raise ValidationError(f"heart needs even degree, got {n}", field="degree")
        if n == 0:
            return module
        last = 1 << (n - 1)
        sum_zero = [(1 << i) | last for i in range(n - 1)]
        inner = self.submodule(module, sum_zero)
        inner_basis = EchelonBasis.from_vectors(sum_zero)
        all_ones = (1 << n) - 1
        return self.quotient(inner, [inner_basis.coordinates(all_ones)])

    # ------------------------------------------------------------------
    # MeatAxe
    # ------------------------------------------------------------------

    def _random_element(self, pool: List[GF2Matrix], generator_count: int, rng: random.Random) -> GF2Matrix:
        pool.append(rng.choice(pool) * rng.choice(pool))
        if len(pool) > generator_count + POOL_PRODUCTS:
            pool.pop(generator_count)
        chosen = [m for m in pool if rng.random() < 0.5] or [rng.choice(pool)]
        element = chosen[0]
        for m in chosen[1:]:
            element = element + m
        return element

    def find_submodule(self, module: GF2Module, rng: random.Random, seed: int = 0) -> Optional[List[int]]:
        """
        Basis of a proper nonzero submodule, or None once Norton's test
        certifies irreducibility.
        """
        d = module.dimension
        if d <= 1:
            return None
        gens = module.generators_or_identity()
        pool = list(gens)
        for _ in range(self.max_attempts):
            element = self._random_element(pool, len(gens), rng)
            v = rng.getrandbits(d) or 1
            minimal = krylov_minimal_polynomial(v, element)
            factor = poly.smallest_irreducible_factor(minimal, self.max_factor_degree)
            if factor is None:
                continue

            w = poly_apply(poly.divmod_poly(minimal, factor)[0], v, element)
            span = self.spin(gens, [w])
            if len(span) < d:
                return list(span.vectors)

            kernel_map = poly_eval(factor, element)
            if kernel_map.nullity() != poly.degree(factor):
                continue
            dual_kernel = kernel_map.transpose().left_nullspace()
            dual_span = self.spin([m.transpose() for m in gens], dual_kernel[:1])
            if len(dual_span) == d:
                return None
            # 对偶模的真子模 → 其零化子是原模的真子模
            annihilator = GF2Matrix(len(dual_span), d, tuple(dual_span.vectors)).transpose()
            return annihilator.left_nullspace()

        raise MeatAxeError(f"no decision after {self.max_attempts} attempts", seed=seed, dimension=d)

    def is_irreducible(self, module: GF2Module, seed: int) -> bool:
        return module.dimension > 0 and self.find_submodule(module, random.Random(seed), seed) is None

    def hom_dimension(self, first: GF2Module, second: GF2Module) -> int:
        """dim of {X : ρ1(g)·X = X·ρ2(g) for all generators g}."""
        d1, d2 = first.dimension, second.dimension
        if d1 == 0 or d2 == 0:
            return 0
        gens1, gens2 = first.generators_or_identity(), second.generators_or_identity()
        if len(gens1) != len(gens2):
            raise ValidationError("modules are not for the same generators", field="module")
        equations = EchelonBasis()
        for rho1, rho2 in zip(gens1, gens2):
            columns = rho2.transpose().rows
            for i in range(d1):
                for j in range(d2):
                    row = 0
                    for k in iter_bits(rho1.rows[i]):
                        row ^= 1 << (k * d2 + j)
                    for k in iter_bits(columns[j]):
                        row ^= 1 << (i * d2 + k)
                    equations.add(row)
        return d1 * d2 - len(equations)

    def chop(self, module: GF2Module, seed: int) -> List[CompositionFactor]:
        """Composition factors with multiplicities, deterministic for a given seed."""
        start = time.perf_counter()
        rng = random.Random(seed)
        stack = [module]
        irreducibles: List[GF2Module] = []
        while stack:
            current = stack.pop()
            if current.dimension == 0:
                continue
            sub = self.find_submodule(current, rng, seed)
            if sub is None:
                irreducibles.append(current)
                continue
            stack.append(self.quotient(current, sub))
            stack.append(self.submodule(current, sub))

        classes: List[List] = []
        for factor in irreducibles:
            for entry in classes:
                if entry[0].dimension == factor.dimension and self.hom_dimension(entry[0], factor) > 0:
                    entry[2] += 1
                    break
            else:
                classes.append([factor, self.hom_dimension(factor, factor), 1])

        factors = [CompositionFactor(module=m, endo_degree=e, multiplicity=k) for m, e, k in classes]
        factors.sort(key=lambda f: (f.dimension, f.endo_degree))
        if module.dimension >= 64:
            log_computation(
                "gf2rep.chop",
                {"dimension": module.dimension, "seed": seed},
                result=[(f.dimension, f.endo_degree, f.multiplicity) for f in factors],
                elapsed=time.perf_counter() - start,
            )
        return factors

    def is_absolutely_irreducible(self, module: GF2Module, seed: int) -> bool:
        return self.is_irreducible(module, seed) and self.hom_dimension(module, module) == 1

    def abs_irred_dims(self, group: PermGroup, seed: Optional[int] = None) -> List[Tuple[int, int]]:
        """(dimension over GF(2^e), e) for every absolutely irreducible module, sorted."""
        seed = get_default_seed() if seed is None else seed
        key = (group, seed)
        with self._lock:
            if key not in self._dims_cache:
                factors = self.chop(self.regular_module(group), seed)
                self._dims_cache[key] = sorted(pair for f in factors for pair in f.split_dims())
            return list(self._dims_cache[key])

    def spot_check(self, module: GF2Module, seed: int, checks: Optional[int] = None) -> bool:
        """Random words w satisfy ρ(w)^ord(w) = 1."""
        if module.group is None:
            raise ValidationError("spot check needs the acting group", field="module")
        group = module.group
        if not group.generators:
            return True
        rng = random.Random(seed)
        for _ in range(checks or get_meataxe_spot_checks()):
            word = [rng.randrange(len(group.generators)) for _ in range(rng.randint(1, 6))]
            perm = identity(group.degree)
            matrix = GF2Matrix.identity(module.dimension)
            for letter in word:
                perm = compose(perm, group.generators[letter])
                matrix = matrix * module.action[letter]
            if not matrix.power(Permutation(list(perm)).order()).is_identity():
                logger.warning(f"homomorphism check failed for word {word}")
                return False
        return True

    # ------------------------------------------------------------------
    # S6 子群搜索
    # ------------------------------------------------------------------

    @exception_handler
    def s6_search(self, seed: Optional[int] = None, check_heart: bool = False) -> S6Report:
        """Subgroup classes of S6 having a 4-dimensional absolutely irreducible module."""
        seed = get_default_seed() if seed is None else seed
        start = time.perf_counter()
        entries: List[S6ReportEntry] = []
        disagreements: List[int] = []
        for subgroup_class in self.groups_service.s6_subgroup_classes():
            group = subgroup_class.representative
            dims = self.abs_irred_dims(group, seed)
            if not any(d == 4 for d, _ in dims):
                continue
            heart_flag = None
            if check_heart:
                heart_flag = self.is_absolutely_irreducible(self.heart(self.permutation_module(group)), seed)
                if not heart_flag:
                    disagreements.append(len(entries))
            entries.append(S6ReportEntry(
                order=subgroup_class.order,
                transitive=group.is_transitive(),
                generators=group.cycle_strings(),
                abs_irred_dims=dims,
                heart_abs_irreducible=heart_flag,
            ))
        report = S6Report(seed=seed, classes=entries, heart_disagreements=disagreements)
        log_computation(
            "gf2rep.s6_search",
            {"seed": seed, "check_heart": check_heart},
            result={"orders": [e.order for e in entries], "heart_disagreements": disagreements},
            elapsed=time.perf_counter() - start,
        )
        return report
