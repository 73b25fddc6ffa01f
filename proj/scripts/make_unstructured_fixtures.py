"""Generate the unstructured unit-square meshes used by test 4.

Each boundary side carries n uniform segments; the interior is tuned to a fixed
vertex count by bisecting the gmsh characteristic length, trying a few meshing
algorithms when a count is skipped. Output is ASCII MSH 2.2 with 3-node triangles and 2-node boundary lines.

    python scripts/make_unstructured_fixtures.py [outdir] [n ...]

Without a list of n every entry of TARGETS is generated. The repository ships
n = 8..128. n = 256 only serves the h = 1/64 level; on one core it did not
finish within 20 minutes.
"""

import sys
from pathlib import Path

import gmsh

# Vertex counts per structured-equivalent resolution n (h = 1/n on the unit square).
TARGETS = {8: 116, 16: 371, 32: 1394, 64: 5509, 128: 21867, 256: 87158}


def node_count(size: float) -> int:
    gmsh.model.mesh.clear()
    gmsh.option.setNumber("Mesh.MeshSizeMin", size)
    gmsh.option.setNumber("Mesh.MeshSizeMax", size)
    gmsh.model.mesh.generate(2)
    tags, _, _ = gmsh.model.mesh.getNodes()
    return len(tags)


def bisect(target: int, h: float) -> float | None:
    lo, hi = 0.3 * h, 3.0 * h  # count decreases with size
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        n = node_count(mid)
        if n == target:
            return mid
        if n > target:
            lo = mid
        else:
            hi = mid
    return None


def tune(target: int, n: int) -> tuple[int, float]:
    for curve in [tag for _, tag in gmsh.model.getEntities(1)]:
        gmsh.model.mesh.setTransfiniteCurve(curve, n + 1)
    for algorithm in (6, 5, 1, 8):
        gmsh.option.setNumber("Mesh.Algorithm", algorithm)
        size = bisect(target, 1.0 / n)
        if size is not None:
            return algorithm, size
    raise RuntimeError(f"no mesh size gives {target} vertices for n={n}")


def main() -> None:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures/meshes")
    wanted = [int(a) for a in sys.argv[2:]] or list(TARGETS)
    out.mkdir(parents=True, exist_ok=True)
    gmsh.initialize()
    gmsh.option.setNumber("General.Verbosity", 0)
    gmsh.option.setNumber("Mesh.MshFileVersion", 2.2)
    gmsh.option.setNumber("Mesh.Binary", 0)
    gmsh.model.add("square")
    gmsh.model.occ.addRectangle(0, 0, 0, 1, 1)
    gmsh.model.occ.synchronize()
    curves = [tag for _, tag in gmsh.model.getEntities(1)]
    gmsh.model.addPhysicalGroup(1, curves, 1)
    gmsh.model.addPhysicalGroup(2, [1], 1)
    for n in wanted:
        target = TARGETS[n]
        algorithm, size = tune(target, n)
        gmsh.option.setNumber("Mesh.Algorithm", algorithm)
        node_count(size)
        path = out / f"unit_square_unstructured_h{1.0 / n:g}.msh"
        gmsh.write(str(path))
        print(f"{path}: {target} vertices, algorithm {algorithm}, size {size:.6g}")
    gmsh.finalize()


if __name__ == "__main__":
    main()
