"""Closed polygonal curves and their purely geometric quantities.

A curve is an ordered list of planar vertices with the closing edge implicit.
Everything here is a pure function of the vertex array: arclength data, area,
tangent/normal frames, discrete curvature, field norms in the du and ds
measures, and the chord-arc embeddedness monitor.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCurve


@dataclass(frozen=True)
class PolyCurve:
    """Closed polygon: vertices[i] connects to vertices[(i+1) % n]."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise ValueError("vertices must be an (n, 2) array")
        if v.shape[0] < 3:
            raise ValueError("a closed curve needs at least 3 vertices")
        if not np.isfinite(v).all():
            raise ValueError("vertices must be finite")
        v = v.copy()
        v.flags.writeable = False
        object.__setattr__(self, "vertices", v)

    @property
    def n(self) -> int:
        return self.vertices.shape[0]


@dataclass(frozen=True)
class ArcData:
    """Arclength coordinates: s cumulative (s[0] = 0), ds vertex weights, total length."""

    s: np.ndarray
    ds: np.ndarray
    length: float


@dataclass(frozen=True)
class FrameData:
    """Unit tangent T, unit normal N = rot90(T), signed curvature k per vertex."""

    tangent: np.ndarray
    normal: np.ndarray
    curvature: np.ndarray


@dataclass(frozen=True)
class FieldNorms:
    linf: float
    l2_du: float
    l2_ds: float
    h1_du: float
    h1_ds: float


@dataclass(frozen=True)
class ChordArcResult:
    value: float
    i: int
    j: int


def edge_vectors(curve: PolyCurve) -> np.ndarray:
    return np.roll(curve.vertices, -1, axis=0) - curve.vertices


def edge_lengths(curve: PolyCurve) -> np.ndarray:
    return np.linalg.norm(edge_vectors(curve), axis=1)


def total_length(curve: PolyCurve) -> float:
    """Perimeter of the polygon. Defined for degenerate curves too."""
    return float(edge_lengths(curve).sum())


def arc_data(curve: PolyCurve) -> ArcData:
    """Cumulative arclength s_i and the vertex quadrature weight
    ds_i = (|X_i - X_{i-1}| + |X_{i+1} - X_i|) / 2.
    """
    el = edge_lengths(curve)
    if el.min() <= 0.0:
        raise DegenerateCurve("zero-length edge")
    s = np.concatenate(([0.0], np.cumsum(el[:-1])))
    ds = 0.5 * (el + np.roll(el, 1))
    return ArcData(s=s, ds=ds, length=float(el.sum()))


def signed_area(curve: PolyCurve) -> float:
    """Shoelace area; positive for counterclockwise orientation."""
    x = curve.vertices[:, 0]
    y = curve.vertices[:, 1]
    xn = np.roll(x, -1)
    yn = np.roll(y, -1)
    return float(0.5 * np.sum(x * yn - xn * y))


def frame_data(curve: PolyCurve) -> FrameData:
    """Vertex frames from adjacent edges.

    T_i is the normalized average of the two adjacent edge directions,
    N_i = rot90(T_i), and k_i is the signed turning angle at the vertex
    divided by ds_i.
    """
    ad = arc_data(curve)
    ev = edge_vectors(curve)
    el = np.linalg.norm(ev, axis=1)
    u = ev / el[:, None]
    t = u + np.roll(u, 1, axis=0)
    tn = np.linalg.norm(t, axis=1)
    if tn.min() <= 0.0:
        raise DegenerateCurve("cusp vertex: adjacent edges anti-parallel")
    t = t / tn[:, None]
    normal = np.stack([-t[:, 1], t[:, 0]], axis=1)
    prev = np.roll(u, 1, axis=0)
    # signed turning angle from the incoming to the outgoing edge
    cross = prev[:, 0] * u[:, 1] - prev[:, 1] * u[:, 0]
    dot = np.einsum("ij,ij->i", prev, u)
    theta = np.arctan2(cross, dot)
    return FrameData(tangent=t, normal=normal, curvature=theta / ad.ds)


def turning_angles(curve: PolyCurve) -> np.ndarray:
    ev = edge_vectors(curve)
    el = np.linalg.norm(ev, axis=1)
    if el.min() <= 0.0:
        raise DegenerateCurve("zero-length edge")
    u = ev / el[:, None]
    prev = np.roll(u, 1, axis=0)
    cross = prev[:, 0] * u[:, 1] - prev[:, 1] * u[:, 0]
    dot = np.einsum("ij,ij->i", prev, u)
    return np.arctan2(cross, dot)


def _as_field(curve: PolyCurve, field) -> np.ndarray:
    f = np.asarray(field, dtype=float)
    if f.shape != (curve.n, 2):
        raise ValueError(f"field must have shape ({curve.n}, 2)")
    return f


def norms(curve: PolyCurve, field) -> FieldNorms:
    """Norms of a per-vertex planar field in the five metrics.

    du uses the uniform weight 1/n; ds uses the arclength weights. Derivative
    terms are per-edge difference quotients weighted by the respective edge
    measure, so the H1 entries are sqrt(L2^2 + derivative part).
    """
    f = _as_field(curve, field)
    n = curve.n
    mag2 = np.einsum("ij,ij->i", f, f)
    linf = float(np.sqrt(mag2.max()))
    l2_du = float(np.sqrt(mag2.sum() / n))
    df = np.roll(f, -1, axis=0) - f
    dmag2 = np.einsum("ij,ij->i", df, df)
    # du edge measure 1/n, difference quotient df * n
    h1_du = float(np.sqrt(mag2.sum() / n + n * dmag2.sum()))
    ad = arc_data(curve)
    el = edge_lengths(curve)
    l2_ds_sq = float((mag2 * ad.ds).sum())
    l2_ds = float(np.sqrt(l2_ds_sq))
    h1_ds = float(np.sqrt(l2_ds_sq + (dmag2 / el).sum()))
    return FieldNorms(linf=linf, l2_du=l2_du, l2_ds=l2_ds, h1_du=h1_du, h1_ds=h1_ds)


def sup_norm(curve: PolyCurve) -> float:
    return float(np.linalg.norm(curve.vertices, axis=1).max())


def chord_arc_min(curve: PolyCurve) -> ChordArcResult:
    """Minimum over vertex pairs of chord length / shorter-arc separation.

    Ties resolve to the lexicographically lowest (i, j) pair. The value lies
    in (0, 1]; small values flag near self-contact.
    """
    ad = arc_data(curve)
    v = curve.vertices
    diff = v[:, None, :] - v[None, :, :]
    chord = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    gap = np.abs(ad.s[:, None] - ad.s[None, :])
    arc = np.minimum(gap, ad.length - gap)
    np.fill_diagonal(arc, 1.0)
    np.fill_diagonal(chord, 2.0)  # ratio 2 > any off-diagonal value
    ratio = chord / arc
    flat = int(np.argmin(ratio))
    i, j = divmod(flat, curve.n)
    return ChordArcResult(value=float(ratio[i, j]), i=i, j=j)


def reindex(curve: PolyCurve, shift: int) -> PolyCurve:
    """Cyclic re-indexing: vertex i of the result is vertex i+shift of the input."""
    return PolyCurve(np.roll(curve.vertices, -shift, axis=0))


def write_curve(curve: PolyCurve, path) -> None:
    """x,y pairs, one per line, 17 significant digits, LF line ends."""
    with open(path, "w", newline="\n") as fh:
        for x, y in curve.vertices:
            fh.write("%.17g,%.17g\n" % (x, y))


def read_curve(path) -> PolyCurve:
    """Read a curve from CSV (x,y per line) or JSON ({"vertices": [[x,y],...]})."""
    text = open(path).read()
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        return PolyCurve(np.asarray(data["vertices"], dtype=float))
    rows = [r for r in csv.reader(text.splitlines()) if r]
    return PolyCurve(np.array([[float(a), float(b)] for a, b in rows]))


def curve_to_json(curve: PolyCurve) -> dict:
    return {"vertices": [[x, y] for x, y in curve.vertices.tolist()]}
