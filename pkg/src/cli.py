#!/usr/bin/env python3
"""
galrep 命令行工具
判别式界的迭代降界、度数筛、置换群与 GF(2) 表示的计算，以及转录结果的复现
"""

import json
import sys
from typing import List, Optional

import click
from pydantic import ValidationError as PydanticValidationError

from src.core.errors.exceptions import GalrepError, ValidationError
from src.core.errors.handler import ErrorHandler
from src.core.exact import Decimal3
from src.models.perm_group import PermGroup
from src.schemas import MinimizeCommand, ProveCommand, ReproduceCommand
from src.service.factory import get_service_factory
from src.utils.logging import get_logger, setup_file_logging

logger = get_logger(__name__)


def _validated(model, **kwargs):
    """参数在任何计算之前校验，失败即为用法错误"""
    try:
        return model(**kwargs)
    except PydanticValidationError as e:
        messages = "; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors())
        raise click.UsageError(messages) from None


class GalrepGroup(click.Group):
    """退出码：0 成功，1 错误，2 仍有剩余度数"""

    def main(self, args=None, prog_name=None, complete_var=None, **extra):
        extra.pop("standalone_mode", None)
        try:
            rv = super().main(args=args, prog_name=prog_name, complete_var=complete_var,
                              standalone_mode=False, **extra)
            code = rv if isinstance(rv, int) else 0
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            code = 1
        except click.ClickException as e:
            e.show()
            code = 1
        except GalrepError as e:
            ErrorHandler.log_error(e)
            click.echo(ErrorHandler.format_for_cli(e), err=True)
            code = e.exit_code
        except Exception as e:
            error = ErrorHandler.handle_general_error(e)
            click.echo(ErrorHandler.format_for_cli(error), err=True)
            code = error.exit_code
        sys.exit(code)


@click.group(cls=GalrepGroup)
def cli():
    """Degree bounds for number fields with small-image Galois representations."""
    setup_file_logging()


@cli.command()
@click.option('--prime', 'prime', required=True, type=int, help='素数 p')
@click.option('--p-length', 'p_length', required=True, type=int, help='p-Sylow 子群的 p-长度 N')
@click.option('--grh', is_flag=True, help='使用 GRH 条件下的判别式表')
@click.option('--totally-real', is_flag=True, help='全实域的判别式表')
@click.option('--preset', help='度数筛预设，默认 p{p}len{N}')
@click.option('--dimension', type=int, help='表示维数 d，默认 max(2, 2^N)')
@click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default='text', help='输出格式')
@click.pass_context
def prove(ctx, prime, p_length, grh, totally_real, preset, dimension, fmt):
    """Run the degree-bound lowering loop for one (p, p-length) case.

    With --prime 2 --p-length 2 --grh this yields the p=2, length-2 lowering
    table; with --prime 3 --p-length 2 --grh --totally-real the loop stops on
    the residual degree 18. Exit status 0 means no degree survives, 2 means a
    residual set remains.

    Reproduces: the lowering tables behind reproduce targets table1, table2
    and table3, and the residual degrees left for the other (p, N) cases.
    """
    command = _validated(ProveCommand, prime=prime, p_length=p_length, grh=grh, totally_real=totally_real,
                         preset=preset, dimension=dimension, format=fmt)
    fixpoint = get_service_factory().get_fixpoint_service()
    request = fixpoint.build_request(command.prime, command.p_length, grh=command.grh,
                                     totally_real=command.totally_real, preset=command.preset,
                                     max_dimension=command.dimension)
    rows, outcome = fixpoint.run(request)
    click.echo(fixpoint.render(request, rows, outcome, command.format), nl=False)
    ctx.exit(outcome.exit_code)


@cli.command()
@click.option('--target', required=True,
              type=click.Choice(['table1', 'table2', 'table3', 'appendixA2']), help='复现目标')
@click.option('--seed', type=int, help='MeatAxe 随机种子（仅 appendixA2）')
def reproduce(target, seed):
    """Regenerate a bundled transcription and compare it line by line.

    table1: p=2, length 2 under GRH. table2: p=3, length 2, totally real under
    GRH. table3: p=2, length 3, totally real under GRH. appendixA2: the S6
    subgroup classes with a 4-dimensional absolutely irreducible module.

    Reproduces: each target above, checked against the transcription bundled
    under config/golden.
    """
    command = _validated(ReproduceCommand, target=target, seed=seed)
    result = get_service_factory().get_reproduce_service().reproduce(command.target, command.seed)
    click.echo(result.output, nl=False)
    click.echo(f"{result.target}: match", err=True)


@cli.command()
@click.option('--prime', 'prime', required=True, type=int, help='素数 p')
@click.option('--p-length', 'p_length', required=True, type=int, help='p-长度 N')
@click.option('--degree', 'degrees', multiple=True, type=int, help='候选度数，可重复')
@click.option('--preset', help='度数筛预设（与 --nmax 同用）')
@click.option('--nmax', type=int, help='度数上界（含）')
def minimize(prime, p_length, degrees, preset, nmax):
    """Minimize 1/n + the wild-ramification sum over candidate degrees.

    This is the quantity subtracted in each step of the lowering tables.

    Reproduces: the min column and its minimizing degree in every row of the
    lowering tables.
    """
    command = _validated(MinimizeCommand, prime=prime, p_length=p_length, degrees=list(degrees),
                         preset=preset, nmax=nmax)
    factory = get_service_factory()
    candidates: List[int] = command.degrees
    if not candidates:
        if command.preset is None or command.nmax is None:
            raise click.UsageError("pass --degree N ... or both --preset and --nmax")
        candidates = factory.get_sieve_service().candidate_degrees(
            factory.get_sieve_service().preset(command.preset), command.nmax
        )
    bounds = factory.get_bounds_service()
    minimum, argmin = bounds.min_over_degrees(candidates, command.prime, command.p_length)
    _, partition = bounds.min_profile(argmin, command.prime, command.p_length)
    click.echo(f"min {minimum.numerator}/{minimum.denominator} at n={argmin} "
               f"partition {partition} over {len(candidates)} degrees")


@cli.command()
@click.option('--preset', required=True, help='度数筛预设')
@click.option('--nmax', required=True, type=int, help='度数上界（含）')
@click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default='text', help='输出格式')
def sieve(preset, nmax, fmt):
    """List the degrees allowed by a preset up to --nmax.

    Presets p2len0..p2len3 and p3len0..p3len2 encode the divisibility and
    forbidden prime-to-p parts used for each (p, p-length) case.

    Reproduces: the candidate degree sets each lowering step minimizes over.
    """
    service = get_service_factory().get_sieve_service()
    degrees = service.candidate_degrees(service.preset(preset), nmax)
    if fmt == 'json':
        click.echo(json.dumps({"preset": preset, "nmax": nmax, "degrees": degrees}))
    else:
        click.echo(f"{len(degrees)} degrees")
        click.echo(" ".join(map(str, degrees)))


@cli.command()
@click.option('--eliminate-18', 'eliminate_18', is_flag=True, help='排除三个 18 阶非交换群')
@click.option('--generators', multiple=True, help='轮换记号的生成元，如 "(1,2,3)(4,5)"')
@click.option('--degree', type=int, help='作用点数')
@click.option('--prime', type=int, help='素数 p（Sylow、p-长度、p-正则类）')
@click.option('--subgroups', is_flag=True, help='列出子群共轭类')
def groups(eliminate_18, generators, degree, prime, subgroups):
    """Permutation group facts: order, orbits, Sylow p-length, Brauer count.

    --eliminate-18 rules out the three nonabelian groups of order 18 as
    images for p=3: two by 3-length 1 and D9 by its two 1-dimensional mod-3
    modules.

    Reproduces: the exclusion of the order-18 images and the p-length of
    the Sylow subgroups quoted for each case.
    """
    service = get_service_factory().get_groups_service()
    if eliminate_18:
        for result in service.eliminate_order_18():
            click.echo(f"{result.description}: order {result.order}, 3-length {result.sylow_p_length}, "
                       f"Brauer count {result.brauer_count}: "
                       f"{result.reason if result.eliminated else 'not eliminated'}")
        return
    if not generators or degree is None:
        raise click.UsageError("pass --eliminate-18 or --generators ... --degree d")
    group = PermGroup.from_cycles(degree, list(generators))
    click.echo(f"group {group}")
    click.echo(f"order {service.order(group)}")
    click.echo(f"transitive {service.is_transitive(group)}")
    click.echo("orbits " + " ".join("{" + ",".join(str(x + 1) for x in sorted(o)) + "}" for o in service.orbits(group)))
    if prime is not None:
        sylow = service.sylow(group, prime)
        click.echo(f"sylow order {sylow.order()}, {prime}-length {service.p_length(sylow, prime)}")
        click.echo(f"{prime}-regular classes {service.p_regular_class_count(group, prime)}")
    if subgroups:
        for subgroup_class in service.subgroup_class_data(group):
            click.echo(f"{subgroup_class.order}\t{subgroup_class.size}\t{subgroup_class.orbit_count}\t"
                       f"{' '.join(subgroup_class.representative.cycle_strings()) or '()'}")


@cli.command('s6-search')
@click.option('--seed', type=int, help='MeatAxe 随机种子')
@click.option('--check-heart', is_flag=True, help='同时检查 6 点置换模的心是否绝对不可约')
def s6_search(seed, check_heart):
    """Subgroup classes of S6 with a 4-dimensional absolutely irreducible GF(2)-module.

    Prints a JSON report; the class list does not depend on the seed.

    Reproduces: the S6 subgroup list of reproduce target appendixA2 (orders,
    transitivity and split dimensions).
    """
    report = get_service_factory().get_gf2rep_service().s6_search(seed, check_heart=check_heart)
    click.echo(report.model_dump_json(indent=2))


@cli.command()
@click.option('--r-max', 'r_max', type=int, default=20, show_default=True, help='域次数上界')
@click.option('--family', type=click.Choice(['Sp4', 'SOplus', 'SOminus', 'Sz']), help='群族')
@click.option('--r', 'r', type=int, help='F_{2^r} 的 r')
def orders(r_max, family, r):
    """Orders of Sp4(F_{2^r}), SO±, Suzuki groups and the least large image.

    Without --family this prints the least order of an allowed large image
    (29120, the Suzuki group over F_8), the Suzuki maximal subgroup orders
    for r=3, the comparison with the GRH degree cap 4800 and any printed
    value that disagrees with the order formulas.

    Reproduces: the least order of a large image, the Suzuki maximal subgroup
    orders and the check that the degree cap 4800 is below that order.
    """
    service = get_service_factory().get_orders_service()
    if family is not None:
        if r is None:
            raise click.UsageError("--family needs --r")
        click.echo(str(service.order_of(family, r)))
        return
    click.echo(f"min large image (r <= {r_max}): {service.min_large_image(r_max)}")
    click.echo(f"at least 4800: {service.corollary_degree_check(4800, r_max)}")
    for entry in service.suzuki_maximal_orders(3):
        value = entry.symbolic or ", ".join(map(str, entry.orders))
        click.echo(f"{entry.label} ({entry.description}): {value}")
    for discrepancy in service.printed_discrepancies():
        click.echo(f"printed {discrepancy.quantity} = {discrepancy.printed}, formula gives {discrepancy.computed}")


@cli.command()
@click.option('--table', 'table_name', required=True, help='表名（grh_general 等）或表文件路径')
@click.option('--rd', help='根判别式上界，得到未被排除的最大度数')
@click.option('--degree', type=int, help='度数，得到该度数上生效的根判别式下界')
def odlyzko(table_name, rd, degree):
    """Look up a discriminant lower-bound table.

    --rd X prints the largest degree a field with root discriminant below X
    can have; --degree n prints the lower bound in force at degree n.
    Without either option the table header and rows are listed.

    Reproduces: the discriminant thresholds read in every lowering step, from
    the bundled tables grh_general, grh_totally_real and unconditional_general.
    """
    if rd is not None and degree is not None:
        raise click.UsageError("pass at most one of --rd and --degree")
    service = get_service_factory().get_odlyzko_service()
    table = service.load_table(table_name)
    if rd is None and degree is None:
        click.echo(f"#grh={int(table.grh)} totally_real={int(table.totally_real)}")
        for line in service.describe(table):
            click.echo(line)
    elif rd is not None:
        try:
            bound = Decimal3.parse(rd)
        except (ValueError, ValidationError) as e:
            raise click.UsageError(f"--rd: {e}") from None
        click.echo(str(service.max_degree(table, bound)))
    else:
        click.echo(str(service.min_root_disc(table, degree)))


def main(args: Optional[List[str]] = None):
    cli.main(args=args, prog_name="galrep")


if __name__ == '__main__':
    main()
