"""Square-lattice geometry under the Manhattan metric.

Vertices are integer pairs (x, y). Spheres and balls are centered at the
origin; ``t_set`` enumerates the shells around the two-vertex center
{(0, 0), (0, 1)}, which tighten packing arguments for odd separation
parameters.

All enumerations return lists sorted lexicographically by (x, y) so that
outputs are deterministic and diffable. Materializing radius m costs
O(m^2) memory. Every function here is pure and safe to call from any
number of threads.
"""

from __future__ import annotations

Vertex = tuple[int, int]


def manhattan_distance(u: Vertex, v: Vertex) -> int:
    """Manhattan distance |u.x - v.x| + |u.y - v.y|."""
    return abs(u[0] - v[0]) + abs(u[1] - v[1])


def sphere(m: int) -> list[Vertex]:
    """All vertices at distance exactly m from the origin.

    Size is 1 for m = 0 and 4m otherwise.
    """
    if m < 0:
        raise ValueError("radius must be non-negative")
    if m == 0:
        return [(0, 0)]
    points: list[Vertex] = []
    for x in range(-m, m + 1):
        rest = m - abs(x)
        if rest == 0:
            points.append((x, 0))
        else:
            points.append((x, -rest))
            points.append((x, rest))
    return points


def ball(m: int) -> list[Vertex]:
    """All vertices at distance at most m from the origin (2m^2 + 2m + 1 points)."""
    if m < 0:
        raise ValueError("radius must be non-negative")
    points: list[Vertex] = []
    for x in range(-m, m + 1):
        rest = m - abs(x)
        points.extend((x, y) for y in range(-rest, rest + 1))
    return points


def t_set(m: int) -> list[Vertex]:
    """Vertices whose minimum distance to {(0, 0), (0, 1)} equals m.

    Returns the two centers themselves for m = 0 and 4m + 2 vertices for
    m >= 1.
    """
    if m < 0:
        raise ValueError("radius must be non-negative")
    if m == 0:
        return [(0, 0), (0, 1)]
    points: list[Vertex] = []
    for x in range(-m, m + 1):
        for y in range(-m, m + 2):
            if min(abs(x) + abs(y), abs(x) + abs(y - 1)) == m:
                points.append((x, y))
    return points
