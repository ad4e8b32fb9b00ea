"""Figure rendering for derivation supports.

The triangulation algorithm is geometric: a graded derivation is locally
nilpotent iff its support (set of strengths) fits one of three shapes, the
interesting one being a lattice triangle.  These helpers render the support
and, when applicable, that triangle to an image file, alongside the delimited
rows the CLI prints.

matplotlib is imported lazily with the Agg backend so that library users who
never render figures do not pay for it.
"""

from __future__ import annotations

from .derivations import Derivation2
from .errors import NotGraded
from .triangulation import TRIANGLE, Strength, classify, support


def support_rows(d: Derivation2) -> list[tuple[int, int, str]]:
    """(s, t, source) rows, sorted; source is the image the term sits in."""
    rows = set()
    for (a1, a2) in d.fx.terms:
        rows.add((a1 - 1, a2, "dx"))
    for (a1, a2) in d.fy.terms:
        rows.add((a1, a2 - 1, "dy"))
    return sorted(rows)


def render_support_figure(d: Derivation2, n: int, path: str) -> str:
    """Plot the support, overlaying the classification triangle when the
    derivation has one.  Returns the path written."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    try:
        shape = classify(d, n)
        caption = shape.kind
    except NotGraded:
        shape = None
        caption = "not graded"

    fig, ax = plt.subplots(figsize=(5.0, 4.2))
    for label, marker in (("dx", "o"), ("dy", "s")):
        pts = [(s, t) for s, t, src in support_rows(d) if src == label]
        if pts:
            ax.scatter(*zip(*pts), marker=marker, s=48, label=f"terms in {label}")
    if shape is not None and shape.kind == TRIANGLE:
        s0, t0 = shape.s0, shape.t0
        xs = [s0, -1, -1, s0]
        ys = [-1, -1, t0, -1]
        ax.plot(xs, ys, "--", color="gray", linewidth=1.2, label="triangle bound")
        caption = f"triangle: s0={s0}, t0={t0}"
    ax.axhline(0, color="black", linewidth=0.5)
    ax.axvline(0, color="black", linewidth=0.5)
    ax.set_xlabel("s")
    ax.set_ylabel("t")
    ax.set_title(f"support of {d} (n={n}): {caption}", fontsize=9)
    ax.legend(loc="best", fontsize=8)
    ax.grid(True, linestyle=":", linewidth=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
