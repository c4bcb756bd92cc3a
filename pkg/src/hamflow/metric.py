"""C0 distance between maps and the area defect of a map."""
from __future__ import annotations

import numpy as np

from .constants import H_FD, N_C0
from .domain import Domain, Support
from .flow import IdentityMap
from .protocol import PlanarMap


def _in_supports(nodes: np.ndarray, domain: Domain, supports: list[Support]) -> np.ndarray:
    mask = np.zeros(len(nodes), dtype=bool)
    for support in supports:
        if support.is_empty:
            continue
        mask |= support.contains(nodes, domain)
    return mask


def _one_sided(f: PlanarMap, g: PlanarMap, n_c0: int) -> float:
    domain = f.domain
    nodes = domain.evaluation_grid(n_c0)
    nodes = nodes[_in_supports(nodes, domain, [f.support, g.support])]
    if len(nodes) == 0:
        return 0.0
    images = g.inverse()(f(nodes))
    return float(np.max(domain.distance(nodes, images)))


def c0_distance(
    f: PlanarMap,
    g: PlanarMap | None = None,
    n_c0: int = N_C0,
    symmetric: bool = False,
) -> float:
    """``max_x d(x, g^-1 f(x))`` over the ``n_c0``-grid of the domain.

    Grid points outside both supports are fixed by both maps and are skipped.
    With ``symmetric=True`` returns ``max(dist(f, g), dist(g, f))``.
    """
    g = g or IdentityMap(f.domain)
    forward = _one_sided(f, g, n_c0)
    if not symmetric:
        return forward
    return max(forward, _one_sided(g, f, n_c0))


def area_defect(f: PlanarMap, n: int = 64, h: float = H_FD) -> float:
    """``max |det Df - 1|`` by central differences of lifted images on an ``n``-grid."""
    domain = f.domain
    nodes = domain.evaluation_grid(n)
    if not f.support.is_full:
        nodes = nodes[_in_supports(nodes, domain, [f.support])]
    if len(nodes) == 0:
        return 0.0
    lift = getattr(f, "lifted", f)
    dx = np.array([h, 0.0])
    dy = np.array([0.0, h])
    d_dx = (lift(nodes + dx) - lift(nodes - dx)) / (2.0 * h)
    d_dy = (lift(nodes + dy) - lift(nodes - dy)) / (2.0 * h)
    det = d_dx[:, 0] * d_dy[:, 1] - d_dx[:, 1] * d_dy[:, 0]
    return float(np.max(np.abs(det - 1.0)))
