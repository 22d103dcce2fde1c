#!/usr/bin/env python3
"""Regenerates the CSV fixtures in this directory.

Both fixtures are fully deterministic (no RNG) so the committed files can be
reproduced bit-for-bit. See README.md here for what each fixture is for.
"""

import numpy as np

GOLDEN_ANGLE = 2.399963229728653


def datasaurus_replica():
    """142-point 2-D cloud with the Datasaurus summary statistics.

    Shape: a dense centre blob plus a 12-point outer circle (a bullseye, in
    the spirit of the datasaurus dozen's 'circle' and 'center' members). The
    raw shape is whitened and then affinely mapped so that the sample means,
    sample standard deviations and Pearson correlation hit the canonical
    Datasaurus values exactly at 3-decimal rounding cell centres:
        mean = (54.263, 47.832), std = (16.765, 26.935), corr = -0.064.
    """
    pts = []
    for k in range(130):
        ang = GOLDEN_ANGLE * k
        r = 0.04 + 0.20 * ((k * 37 % 97) / 97.0)
        cx, cy = [(0.0, 0.0), (0.18, 0.07), (-0.15, -0.11), (0.05, -0.16)][k % 4]
        pts.append((cx + r * np.cos(ang), cy + r * np.sin(ang)))
    for k in range(12):
        ang = 2 * np.pi * k / 12 + 0.26
        pts.append((5.0 * np.cos(ang), 5.0 * np.sin(ang)))
    X = np.array(pts)

    X = X - X.mean(axis=0)
    L = np.linalg.cholesky(np.cov(X.T))
    X = X @ np.linalg.inv(L).T  # unit sample covariance

    tx, ty, sx, sy, r = 54.263, 47.832, 16.765, 26.935, -0.064
    Lt = np.array([[sx, 0.0], [r * sy, sy * np.sqrt(1 - r * r)]])
    return X @ Lt.T + np.array([tx, ty])


def two_group_fixture():
    """50 observations in 4-D with two geometrically distinct groups.

    Group 0: five tight 5-point clusters (intra-cluster spread ~0.4, cluster
    centres ~3 apart) -- dense cliques form at small cutoffs.
    Group 1: 25 points along a coarse lattice line with ~7.5 spacing, offset
    ~60 away -- no edges until far larger cutoffs.
    """
    rows = []
    base = np.array([100.0, 50.0, 30.0, 70.0])
    centers = [
        base,
        base + np.array([3.0, 0.5, -0.5, 1.0]),
        base + np.array([-1.0, 3.0, 1.0, -0.5]),
        base + np.array([1.5, -2.5, 2.0, 0.5]),
        base + np.array([-2.0, -1.0, -2.5, 2.0]),
    ]
    k = 0
    for c in centers:
        for j in range(5):
            ang = GOLDEN_ANGLE * k
            off = 0.4 * np.array(
                [np.cos(ang), np.sin(ang), np.cos(2.1 * ang + 0.7), np.sin(1.3 * ang + 0.2)]
            ) * ((j + 1) / 5.0)
            rows.append((0, c + off))
            k += 1
    far = base + np.array([60.0, 25.0, -20.0, 15.0])
    step = np.array([6.5, 3.0, -2.0, 1.0])
    for j in range(25):
        wobble = 0.3 * np.array(
            [np.sin(GOLDEN_ANGLE * j), np.cos(GOLDEN_ANGLE * j), np.sin(2.0 * j), np.cos(3.0 * j)]
        )
        rows.append((1, far + j * step + wobble))
    return rows


def main():
    X = datasaurus_replica()
    with open("datasaurus_replica.csv", "w") as f:
        f.write("x,y\n")
        for x, y in X:
            f.write(f"{x:.9f},{y:.9f}\n")
    print("datasaurus_replica.csv:")
    print("  mean", np.round(X.mean(axis=0), 3), "std", np.round(X.std(axis=0, ddof=1), 3),
          "corr", np.round(np.corrcoef(X.T)[0, 1], 3))

    rows = two_group_fixture()
    with open("two_group_fixture.csv", "w") as f:
        f.write("group,f1,f2,f3,f4\n")
        for label, v in rows:
            f.write(f"{label}," + ",".join(f"{x:.9f}" for x in v) + "\n")
    print("two_group_fixture.csv: 50 rows, 2 groups")


if __name__ == "__main__":
    main()
