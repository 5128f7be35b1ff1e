from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from nanoshell.torsion import SweepRecord  # noqa: E402

_PANELS = (
    ("torsion_angle", "aT, rad/nm"),
    ("torsion_stiffness", "sT, nN·nm²"),
    ("axial_strain", "axial strain"),
)


def write_sweep_svg(records: Sequence[SweepRecord], path: str) -> None:
    ok = [r for r in records if not r.error]
    ms = [r.m for r in ok]
    n = records[0].n if records else 0

    plt.rcParams["svg.hashsalt"] = "nanoshell"
    fig, axes = plt.subplots(1, len(_PANELS), figsize=(12, 3.6))
    for ax, (attr, label) in zip(axes, _PANELS):
        ax.plot(ms, [getattr(r, attr) for r in ok], marker="o")
        ax.set_xlabel(f"m  (n = {n})")
        ax.set_ylabel(label)
        ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
