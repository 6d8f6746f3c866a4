"""Walk a small ring of points through the whole persistence pipeline.

Eight labeled points sit on a rough circle. Watching balls grow around
them: nearby points merge first (dimension-0 bars die), then the last gap
closes and a loop appears (a dimension-1 bar is born), and finally the
loop fills in with triangles (the bar dies). Run:

    python3 demos/ring_walkthrough.py
"""

from __future__ import annotations

from persistry import (
    PointCloud,
    RenderOptions,
    betti_at,
    build_distance_matrix,
    compute_intervals,
    degree_sparsity,
    render_text,
    rips_filtration,
    sparsity,
)

POINTS = {
    "A": (49.0, 77.0),
    "B": (78.0, 65.0),
    "C": (90.0, 32.0),
    "D": (74.0, 8.0),
    "E": (41.0, 6.0),
    "F": (15.0, 23.0),
    "G": (9.0, 48.0),
    "H": (18.0, 62.0),
}


def main() -> None:
    cloud = PointCloud(POINTS.items())
    print(f"cloud: {cloud.cardinality} points in {cloud.dim}-D\n")

    print(f"sparsity (closest pair): {sparsity(cloud):.3f}")
    profile = degree_sparsity(cloud)
    merges = ", ".join(f"{v:.2f}" for v in profile.values)
    print(f"merge scales (MST edges): [{merges}]")
    print(f"everything is one component after t = {profile.top_line:.3f}\n")

    filtration = rips_filtration(build_distance_matrix(cloud))
    barcode = compute_intervals(filtration, max_dim=1)

    print("dimension-0 barcode (components):")
    print(render_text(barcode, RenderOptions(dim=0), columns=60))
    print("dimension-1 barcode (loops):")
    print(render_text(barcode, RenderOptions(dim=1), columns=60))

    loop = barcode.in_dim(1)[0]
    for t in (20.0, 40.0, 80.0):
        b0 = betti_at(barcode, t, 0)
        b1 = betti_at(barcode, t, 1)
        print(f"t = {t:5.1f}: {b0} component(s), {b1} loop(s)")
    print(f"\nthe ring is visible for t in [{loop.birth:.3f}, {loop.death:.3f})")


if __name__ == "__main__":
    main()
