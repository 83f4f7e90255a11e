"""Evaluation grids shared by the verification suites, the CLI and the tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class Grid:
    """Strictly increasing positive points, kept as exact rationals."""

    points: tuple[Fraction, ...]
    description: str = ""

    def __post_init__(self):
        pts = tuple(Fraction(p) for p in self.points)
        if not pts:
            raise DomainError("grid must contain at least one point")
        if pts[0] <= 0:
            raise DomainError(f"grid points must be positive, got {pts[0]}")
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise DomainError("grid points must be strictly increasing")
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def integers(self) -> list[int]:
        """The integer points of the grid (used by the Wallis checks)."""
        return [int(p) for p in self.points if p.denominator == 1]


def _dec(*values: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


STANDARD = Grid(_dec("0.01", "0.1", "0.5", "1", "2", "5", "10", "20"), "standard")
THETA = Grid(_dec("0.1", "1", "5", "20"), "theta")
SMALL = Grid(_dec("0.05", "0.25", "0.5", "1", "2", "4", "8", "16"), "small")
CM_POINTS = Grid(_dec("0.5", "1", "2", "5"), "cm")
RATIO_POINTS = Grid(_dec("0.5", "1", "2", "5", "10", "100"), "ratio")


def _dense() -> Grid:
    # 64 log-spaced points from 1e-3 to 1e2, each rounded to 12 significant digits
    pts = [Fraction(f"{10 ** (-3 + 5 * i / 63):.12g}") for i in range(64)]
    return Grid(tuple(pts), "dense")


DENSE = _dense()

PRESETS = {"standard": STANDARD, "small": SMALL, "dense": DENSE, "theta": THETA}


def parse_grid(spec: str) -> Grid:
    """A preset name, ``a:b:step`` (inclusive of b when it is hit) or a comma list."""
    spec = spec.strip()
    if spec in PRESETS:
        return PRESETS[spec]
    try:
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise DomainError(f"grid range must be a:b:step, got {spec!r}")
            a, b, step = (Fraction(p) for p in parts)
            if step <= 0:
                raise DomainError(f"grid step must be > 0, got {parts[2]}")
            if b < a:
                raise DomainError(f"grid range end {parts[1]} is below its start {parts[0]}")
            count = int((b - a) / step) + 1
            if count > 100_000:
                raise DomainError(f"grid {spec!r} has {count} points; the limit is 100000")
            return Grid(tuple(a + i * step for i in range(count)), spec)
        return Grid(tuple(Fraction(p) for p in spec.split(",")), spec)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse grid {spec!r}: {exc}") from None
