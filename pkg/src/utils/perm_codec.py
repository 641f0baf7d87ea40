"""
置换的轮换记号编解码："(1,2)(3,5)(4,6)"，点从 1 开始，恒等置换写作 "()"。
内部统一使用从 0 开始的像元组。
"""

import re
from typing import Iterable, List, Sequence, Tuple

from src.core.errors.exceptions import ValidationError

CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)")


def identity(degree: int) -> Tuple[int, ...]:
    return tuple(range(degree))


def compose(first: Sequence[int], second: Sequence[int]) -> Tuple[int, ...]:
    """Apply ``first`` then ``second`` (sympy's product order)."""
    return tuple(second[i] for i in first)


def parse_cycles(text: str, degree: int) -> Tuple[int, ...]:
    """Parse cycle notation into an image tuple on ``degree`` points; cycles compose left to right."""
    stripped = re.sub(r"\s", "", text)
    if not stripped:
        raise ValidationError("empty permutation", field="generators")
    position = 0
    images = identity(degree)
    for match in CYCLE_RE.finditer(stripped):
        if match.start() != position:
            raise ValidationError(f"could not parse permutation {text!r}", field="generators")
        position = match.end()
        if not match.group(1):
            continue
        cycle = [int(point) - 1 for point in match.group(1).split(",")]
        if len(set(cycle)) != len(cycle) or min(cycle) < 0 or max(cycle) >= degree:
            raise ValidationError(f"bad cycle {match.group(0)} on {degree} points", field="generators")
        step = list(range(degree))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            step[a] = b
        images = compose(images, step)
    if position != len(stripped):
        raise ValidationError(f"could not parse permutation {text!r}", field="generators")
    return images


def format_cycles(images: Sequence[int]) -> str:
    seen = set()
    out: List[str] = []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        point = images[start]
        while point != start:
            seen.add(point)
            cycle.append(point)
            point = images[point]
        out.append("(" + ",".join(str(i + 1) for i in cycle) + ")")
    return "".join(out) or "()"


def format_generators(generators: Iterable[Sequence[int]]) -> List[str]:
    return [format_cycles(g) for g in generators]
