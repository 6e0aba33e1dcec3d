"""Canonical model of the projective space PG(n-1, q).

Points are the 1-dimensional subspaces of F_q^n, represented by their
normalized coordinate vector: the leftmost nonzero coordinate equals 1.
The canonical point order is lexicographic on the coordinate tuple with
the leftmost coordinate most significant, so for q = 2 a point's id is
exactly its bitmask minus one.

Subspaces are enumerated through their reduced row echelon form, which
visits every t-dimensional linear subspace exactly once and in a fixed,
reproducible order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import InvalidDimension, SamePoint, ZeroVector
from .gf import Field, build_field

Point = tuple[int, ...]


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional linear subspaces of F_q^n, exactly."""
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def normalize(v: Point, fld: Field) -> Point:
    """Scale v so its leftmost nonzero coordinate is 1.  Idempotent."""
    for lead, c in enumerate(v):
        if c:
            if c == 1:
                return tuple(v)
            lam = fld.inv(c)
            return tuple(fld.mul(lam, x) for x in v)
    raise ZeroVector("cannot normalize the zero vector")


@dataclass(frozen=True)
class Subspace:
    """Point set of a t-dimensional linear subspace (projective dim t-1)."""

    dim_projective: int
    point_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.point_ids)


@dataclass(frozen=True)
class ProjectiveSpace:
    n: int
    field: Field
    points: list[Point] = field(repr=False)
    point_index: dict[Point, int] = field(repr=False)
    coords: np.ndarray = field(repr=False)  # (num_points, n) uint8

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def num_points(self) -> int:
        return len(self.points)

    def id_of(self, v: Point) -> int:
        """PointId of the (not necessarily normalized) nonzero vector v."""
        return self.point_index[normalize(v, self.field)]

    def __repr__(self) -> str:  # points list is too large to show
        return f"ProjectiveSpace(n={self.n}, q={self.q}, points={self.num_points})"


@lru_cache(maxsize=64)
def build_space(n: int, q: int) -> ProjectiveSpace:
    """Build (and memoize) PG(n-1, q) with its canonical point order."""
    if n < 1:
        raise InvalidDimension(f"n={n} must be >= 1")
    fld = build_field(q)
    points: list[Point] = []
    # Lex-ascending: more leading zeros come first.
    for lead in range(n - 1, -1, -1):
        prefix = (0,) * lead + (1,)
        for suffix in itertools.product(range(q), repeat=n - lead - 1):
            points.append(prefix + suffix)
    expected = (q ** n - 1) // (q - 1)
    assert len(points) == expected
    index = {p: i for i, p in enumerate(points)}
    coords = np.array(points, dtype=np.uint8).reshape(expected, n)
    coords.setflags(write=False)
    return ProjectiveSpace(n=n, field=fld, points=points, point_index=index, coords=coords)


def split(p: Point, d: int) -> tuple[Point, Point]:
    """Split coordinates into the first n-d and the last d positions."""
    n = len(p)
    return p[: n - d], p[n - d:]


def third_point(space: ProjectiveSpace, x: int, y: int) -> int:
    """Id of the third point on the line through x and y (q = 2 only)."""
    if space.q != 2:
        raise InvalidDimension("third_point is defined for q = 2 only")
    if x == y:
        raise SamePoint("third_point needs two distinct points")
    # For q = 2 the id is the bitmask minus one, so the sum is an XOR.
    return ((x + 1) ^ (y + 1)) - 1


def _free_positions(pivots: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Free entries of an echelon form with the given pivot columns.

    Row-major order; this fixes the enumeration order of subspaces
    sharing a pivot set.
    """
    pivot_set = set(pivots)
    return [
        (r, c)
        for r, p in enumerate(pivots)
        for c in range(p + 1, n)
        if c not in pivot_set
    ]


@lru_cache(maxsize=32)
def _coefficient_points(t: int, q: int) -> tuple[Point, ...]:
    """Canonical points of PG(t-1, q), used as row-combination weights."""
    return tuple(build_space(t, q).points)


def _span_ids(space: ProjectiveSpace, rows: list[Point]) -> tuple[int, ...]:
    """Sorted ids of the points spanned by linearly independent rows."""
    fld = space.field
    t = len(rows)
    n = space.n
    ids = []
    for coeff in _coefficient_points(t, space.q):
        vec = [0] * n
        for lam, row in zip(coeff, rows):
            if lam == 0:
                continue
            for j in range(n):
                vec[j] = fld.add(vec[j], fld.mul(lam, row[j]))
        ids.append(space.point_index[normalize(tuple(vec), fld)])
    ids.sort()
    return tuple(ids)


def enumerate_subspaces(space: ProjectiveSpace, t: int) -> Iterator[Subspace]:
    """Yield every t-dimensional linear subspace exactly once.

    Ordered by pivot-column combination, then by the free entries read as
    a base-q odometer (first free position most significant).  Total count
    is gaussian_binomial(n, t, q).
    """
    n, q = space.n, space.q
    if not 1 <= t <= n:
        raise InvalidDimension(f"t={t} out of range for n={n}")
    for pivots in itertools.combinations(range(n), t):
        free = _free_positions(pivots, n)
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(t)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            ids = _span_ids(space, [tuple(r) for r in rows])
            yield Subspace(dim_projective=t - 1, point_ids=ids)


def rref_of_points(space: ProjectiveSpace, point_ids) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical key of the subspace spanned by the given points.

    Returns (pivot columns, free-entry values) of the reduced row echelon
    basis.  Keys compare exactly like the enumeration order of
    enumerate_subspaces, so the minimum key is the first subspace seen.
    """
    fld = space.field
    n = space.n
    rows = [list(space.points[i]) for i in point_ids]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = None
        for rr in range(r, len(rows)):
            if rows[rr][c]:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        lam = fld.inv(rows[r][c])
        rows[r] = [fld.mul(lam, x) for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and rows[rr][c]:
                coef = rows[rr][c]
                rows[rr] = [fld.sub(x, fld.mul(coef, y)) for x, y in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    rank = r
    free = _free_positions(tuple(pivots), n)
    values = tuple(rows[fr][fc] for fr, fc in free)
    assert rank == len(pivots)
    return tuple(pivots), values
