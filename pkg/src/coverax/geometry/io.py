"""Shape file I/O: OBJ, OFF, PLY (ascii / binary little-endian), XYZ."""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from ..errors import EmptyShape, ParseError, TooFewPoints
from .cloud import OrientedPointCloud
from .mesh import TriangleMesh

_PLY_SCALAR = {
    "char": "b", "int8": "b",
    "uchar": "B", "uint8": "B",
    "short": "h", "int16": "h",
    "ushort": "H", "uint16": "H",
    "int": "i", "int32": "i",
    "uint": "I", "uint32": "I",
    "float": "f", "float32": "f",
    "double": "d", "float64": "d",
}


def _fan(indices: list[int]) -> list[tuple[int, int, int]]:
    return [(indices[0], indices[k], indices[k + 1]) for k in range(1, len(indices) - 1)]


def _load_obj(path: Path) -> TriangleMesh:
    vertices: list[list[float]] = []
    triangles: list[tuple[int, int, int]] = []
    with open(path, "r", errors="replace") as fh:
        for lineno, raw in enumerate(fh, 1):
            parts = raw.split()
            if not parts:
                continue
            if parts[0] == "v":
                if len(parts) < 4:
                    raise ParseError(f"{path}:{lineno}: malformed vertex line")
                try:
                    vertices.append([float(x) for x in parts[1:4]])
                except ValueError as exc:
                    raise ParseError(f"{path}:{lineno}: {exc}") from exc
            elif parts[0] == "f":
                try:
                    idx = [int(tok.split("/")[0]) for tok in parts[1:]]
                except ValueError as exc:
                    raise ParseError(f"{path}:{lineno}: {exc}") from exc
                if len(idx) < 3:
                    raise ParseError(f"{path}:{lineno}: face with < 3 vertices")
                # OBJ indices are 1-based; negatives count from the end.
                idx = [i - 1 if i > 0 else len(vertices) + i for i in idx]
                triangles.extend(_fan(idx))
    if not triangles:
        raise EmptyShape(f"{path}: no valid triangles")
    return TriangleMesh(np.array(vertices), np.array(triangles))


def _load_off(path: Path) -> TriangleMesh:
    with open(path, "r", errors="replace") as fh:
        tokens: list[str] = []
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                tokens.extend(line.split())
    if not tokens or tokens[0] != "OFF":
        raise ParseError(f"{path}: missing OFF header")
    try:
        nv, nf = int(tokens[1]), int(tokens[2])
        pos = 4  # skip edge count
        coords = [float(t) for t in tokens[pos : pos + 3 * nv]]
        pos += 3 * nv
        triangles: list[tuple[int, int, int]] = []
        for _ in range(nf):
            cnt = int(tokens[pos])
            idx = [int(t) for t in tokens[pos + 1 : pos + 1 + cnt]]
            pos += 1 + cnt
            triangles.extend(_fan(idx))
    except (ValueError, IndexError) as exc:
        raise ParseError(f"{path}: malformed OFF data: {exc}") from exc
    if not triangles:
        raise EmptyShape(f"{path}: no valid triangles")
    return TriangleMesh(np.array(coords).reshape(-1, 3), np.array(triangles))


def _parse_ply(path: Path):
    """Returns (elements, data) where data maps element -> list of row dicts."""
    with open(path, "rb") as fh:
        header_lines = []
        while True:
            line = fh.readline()
            if not line:
                raise ParseError(f"{path}: truncated PLY header")
            text = line.decode("ascii", errors="replace").strip()
            header_lines.append(text)
            if text == "end_header":
                break
        body = fh.read()

    if not header_lines or header_lines[0] != "ply":
        raise ParseError(f"{path}: not a PLY file")
    fmt = None
    elements: list[tuple[str, int, list]] = []  # (name, count, props)
    for text in header_lines[1:]:
        parts = text.split()
        if not parts or parts[0] == "comment":
            continue
        if parts[0] == "format":
            fmt = parts[1]
        elif parts[0] == "element":
            elements.append((parts[1], int(parts[2]), []))
        elif parts[0] == "property":
            if not elements:
                raise ParseError(f"{path}: property before element")
            if parts[1] == "list":
                elements[-1][2].append(("list", parts[2], parts[3], parts[4]))
            else:
                elements[-1][2].append(("scalar", parts[1], parts[2]))

    if fmt not in ("ascii", "binary_little_endian"):
        raise ParseError(f"{path}: unsupported PLY format {fmt!r}")

    data: dict[str, list[dict]] = {}
    if fmt == "ascii":
        tokens = body.decode("ascii", errors="replace").split()
        pos = 0
        for name, count, props in elements:
            rows = []
            try:
                for _ in range(count):
                    row = {}
                    for prop in props:
                        if prop[0] == "list":
                            cnt = int(tokens[pos]); pos += 1
                            row[prop[3]] = [int(float(tokens[pos + k])) for k in range(cnt)]
                            pos += cnt
                        else:
                            row[prop[2]] = float(tokens[pos]); pos += 1
                    rows.append(row)
            except (ValueError, IndexError) as exc:
                raise ParseError(f"{path}: malformed PLY body: {exc}") from exc
            data[name] = rows
    else:
        pos = 0
        for name, count, props in elements:
            rows = []
            try:
                for _ in range(count):
                    row = {}
                    for prop in props:
                        if prop[0] == "list":
                            cfmt = "<" + _PLY_SCALAR[prop[1]]
                            (cnt,) = struct.unpack_from(cfmt, body, pos)
                            pos += struct.calcsize(cfmt)
                            ifmt = "<" + _PLY_SCALAR[prop[2]] * int(cnt)
                            row[prop[3]] = list(struct.unpack_from(ifmt, body, pos))
                            pos += struct.calcsize(ifmt)
                        else:
                            sfmt = "<" + _PLY_SCALAR[prop[1]]
                            (val,) = struct.unpack_from(sfmt, body, pos)
                            row[prop[2]] = float(val)
                            pos += struct.calcsize(sfmt)
                    rows.append(row)
            except (struct.error, KeyError) as exc:
                raise ParseError(f"{path}: malformed PLY body: {exc}") from exc
            data[name] = rows
    return data


def _load_ply_mesh(path: Path) -> TriangleMesh:
    data = _parse_ply(path)
    verts = data.get("vertex", [])
    faces = data.get("face", [])
    if not verts or not faces:
        raise EmptyShape(f"{path}: PLY mesh needs vertex and face elements")
    vertices = np.array([[v["x"], v["y"], v["z"]] for v in verts])
    triangles: list[tuple[int, int, int]] = []
    for f in faces:
        idx = f.get("vertex_indices") or f.get("vertex_index")
        if idx is None or len(idx) < 3:
            raise ParseError(f"{path}: face without vertex indices")
        triangles.extend(_fan(list(idx)))
    return TriangleMesh(vertices, np.array(triangles))


def _load_ply_cloud(path: Path) -> OrientedPointCloud:
    data = _parse_ply(path)
    verts = data.get("vertex", [])
    if len(verts) < 4:
        raise TooFewPoints(f"{path}: {len(verts)} points")
    points = np.array([[v["x"], v["y"], v["z"]] for v in verts])
    normals = None
    if verts and all(k in verts[0] for k in ("nx", "ny", "nz")):
        normals = np.array([[v["nx"], v["ny"], v["nz"]] for v in verts])
    return OrientedPointCloud(points, normals)


def _load_xyz(path: Path) -> OrientedPointCloud:
    rows = []
    with open(path, "r", errors="replace") as fh:
        for lineno, raw in enumerate(fh, 1):
            parts = raw.split()
            if not parts or parts[0].startswith("#"):
                continue
            try:
                rows.append([float(x) for x in parts])
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
    if len(rows) < 4:
        raise TooFewPoints(f"{path}: {len(rows)} points")
    widths = {len(r) for r in rows}
    # 4 columns: x y z + one scalar (e.g. per-point radius); scalar ignored here
    if len(widths) != 1 or next(iter(widths)) not in (3, 4, 6):
        raise ParseError(f"{path}: expected 3, 4 or 6 columns per line")
    arr = np.array(rows)
    normals = arr[:, 3:6] if arr.shape[1] == 6 else None
    return OrientedPointCloud(arr[:, :3], normals)


def load_mesh(path, format: str | None = None) -> TriangleMesh:
    """Load a triangle mesh, dropping degenerate triangles."""
    path = Path(path)
    if not path.exists():
        raise ParseError(f"no such file: {path}")
    fmt = (format or path.suffix.lstrip(".")).lower()
    if fmt == "obj":
        mesh = _load_obj(path)
    elif fmt == "off":
        mesh = _load_off(path)
    elif fmt == "ply":
        mesh = _load_ply_mesh(path)
    else:
        raise ParseError(f"unsupported mesh format: {fmt!r}")
    mesh = mesh.drop_degenerate()
    if len(mesh.triangles) == 0:
        raise EmptyShape(f"{path}: all triangles degenerate")
    return mesh


def load_point_cloud(path, format: str | None = None) -> OrientedPointCloud:
    """Load a point cloud; normals are normalized when present."""
    path = Path(path)
    if not path.exists():
        raise ParseError(f"no such file: {path}")
    fmt = (format or path.suffix.lstrip(".")).lower()
    if fmt == "xyz":
        return _load_xyz(path)
    if fmt == "ply":
        return _load_ply_cloud(path)
    raise ParseError(f"unsupported point-cloud format: {fmt!r}")


def save_xyz(path, points: np.ndarray, extra: np.ndarray | None = None) -> None:
    """Write points (and optional per-point scalar column) as whitespace rows."""
    points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
    cols = points
    if extra is not None:
        cols = np.column_stack([points, np.asarray(extra, dtype=np.float64)])
    with open(path, "w") as fh:
        for row in cols:
            fh.write(" ".join(f"{x:.17g}" for x in row) + "\n")
