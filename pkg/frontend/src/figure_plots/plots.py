"""Figure catalogue and batch renderer.

Each figure is a pure view of the solve CSVs: joint mass surface,
conditional-distribution slices, taker value surface and slices, quote
surfaces and slices, and maker value curve/surface — the same shapes for
a baseline run and for a high-signal-volatility run. Styling is fixed so
re-rendering the same artifacts is deterministic; the sha256 of every
input CSV is embedded in the PNG text metadata.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .artifacts import ArtifactError, ArtifactSet

__all__ = ["PlotSpec", "FIGURES", "conditional", "render_all"]

DEFAULT_QM_SLICES = (-80.0, 0.0, 80.0)
DEFAULT_B_SLICES = (-2.0, 0.0, 2.0)

_STYLE = {
    "figure.figsize": (6.4, 4.4),
    "figure.dpi": 110,
    "savefig.dpi": 110,
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.4,
    "image.cmap": "viridis",
}


@dataclass(frozen=True)
class PlotSpec:
    """One renderable figure: inputs, kind, conditioning and output name."""

    name: str                      # output image stem
    kind: str                      # surface | slice | curve
    inputs: tuple[str, ...]        # CSV artifacts consumed
    conditions_qm: bool = False    # uses the q_m conditioning values
    conditions_b: bool = False     # uses the b conditioning values

    def output_path(self, out_dir: Path) -> Path:
        return out_dir / f"{self.name}.png"


def conditional(matrix: np.ndarray, axis: int) -> np.ndarray:
    """Normalize a joint (q_m x b) mass matrix along `axis`.

    axis=0: columns become p(q_m | b); axis=1: rows become p(b | q_m).
    All-zero fibres are left at zero instead of dividing by zero.
    """
    m = np.asarray(matrix, dtype=float)
    tot = m.sum(axis=axis, keepdims=True)
    return np.divide(m, tot, out=np.zeros_like(m), where=tot > 0)


def _heat(ax, mat, x, y, xlabel, ylabel, title):
    im = ax.imshow(mat, origin="lower", aspect="auto",
                   extent=(x[0], x[-1], y[0], y[-1]))
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(False)
    plt.colorbar(im, ax=ax)


# ---- individual figure renderers (ax drawing only) ------------------------

def _fig_mass_joint_surface(a: ArtifactSet, ax, qs, bs):
    t = a.times[-1]
    m = a.pivot_qm_b("p_mass.csv", "p", t)
    _heat(ax, m.to_numpy().T, m.index.to_numpy(), m.columns.to_numpy(),
          "taker inventory q_m", "signal b", f"joint mass p(q_m, b) at t={t:g}")


def _fig_mass_conditional_qm_given_b(a: ArtifactSet, ax, qs, bs):
    t = a.times[-1]
    m = a.pivot_qm_b("p_mass.csv", "p", t)
    cond = conditional(m.to_numpy(), axis=0)
    for b in bs:
        j = int(np.nonzero(np.isclose(m.columns.to_numpy(), b))[0][0])
        ax.plot(m.index, cond[:, j], marker="o", ms=3, label=f"b = {b:g}")
    ax.set_xlabel("taker inventory q_m")
    ax.set_ylabel("p(q_m | b)")
    ax.set_title(f"conditional inventory distribution at t={t:g}")
    ax.legend()


def _fig_mass_conditional_b_given_qm(a: ArtifactSet, ax, qs, bs):
    t = a.times[-1]
    m = a.pivot_qm_b("p_mass.csv", "p", t)
    cond = conditional(m.to_numpy(), axis=1)
    for qm in qs:
        i = int(np.nonzero(np.isclose(m.index.to_numpy(), qm))[0][0])
        ax.plot(m.columns, cond[i, :], marker="o", ms=3, label=f"q_m = {qm:g}")
    ax.set_xlabel("signal b")
    ax.set_ylabel("p(b | q_m)")
    ax.set_title(f"conditional signal distribution at t={t:g}")
    ax.legend()


def _fig_mass_marginal_evolution(a: ArtifactSet, ax, qs, bs):
    times = a.times
    picks = times[np.unique(np.linspace(0, len(times) - 1, 5).astype(int))]
    for t in picks:
        m = a.pivot_qm_b("p_mass.csv", "p", t)
        ax.plot(m.index, m.sum(axis=1), label=f"t = {t:g}")
    ax.set_xlabel("taker inventory q_m")
    ax.set_ylabel("marginal p(q_m)")
    ax.set_title("inventory marginal over time")
    ax.legend()


def _fig_taker_value_surface(a: ArtifactSet, ax, qs, bs):
    t = a.times[0]
    m = a.pivot_qm_b("w_taker.csv", "W_m", t)
    _heat(ax, m.to_numpy().T, m.index.to_numpy(), m.columns.to_numpy(),
          "taker inventory q_m", "signal b", f"taker value W_m at t={t:g}")


def _fig_taker_value_slices_b(a: ArtifactSet, ax, qs, bs):
    t = a.times[0]
    m = a.pivot_qm_b("w_taker.csv", "W_m", t)
    for b in bs:
        j = int(np.nonzero(np.isclose(m.columns.to_numpy(), b))[0][0])
        ax.plot(m.index, m.to_numpy()[:, j], label=f"b = {b:g}")
    ax.set_xlabel("taker inventory q_m")
    ax.set_ylabel("W_m")
    ax.set_title(f"taker value slices at t={t:g}")
    ax.legend()


def _fig_taker_value_slices_qm(a: ArtifactSet, ax, qs, bs):
    t = a.times[0]
    m = a.pivot_qm_b("w_taker.csv", "W_m", t)
    for qm in qs:
        i = int(np.nonzero(np.isclose(m.index.to_numpy(), qm))[0][0])
        ax.plot(m.columns, m.to_numpy()[i, :], marker="o", ms=3,
                label=f"q_m = {qm:g}")
    ax.set_xlabel("signal b")
    ax.set_ylabel("W_m")
    ax.set_title(f"taker value against the signal at t={t:g}")
    ax.legend()


def _fig_taker_bid_surface(a: ArtifactSet, ax, qs, bs):
    t = a.times[0]
    m = a.pivot_qm_b("quotes_taker.csv", "bid", t)
    _heat(ax, m.to_numpy().T, m.index.to_numpy(), m.columns.to_numpy(),
          "taker inventory q_m", "signal b", f"taker bid quote at t={t:g}")


def _fig_taker_ask_surface(a: ArtifactSet, ax, qs, bs):
    t = a.times[0]
    m = a.pivot_qm_b("quotes_taker.csv", "ask", t)
    _heat(ax, m.to_numpy().T, m.index.to_numpy(), m.columns.to_numpy(),
          "taker inventory q_m", "signal b", f"taker ask quote at t={t:g}")


def _fig_taker_quote_slices(a: ArtifactSet, ax, qs, bs):
    t = a.times[0]
    slab = a.slab("quotes_taker.csv", t)
    slab = slab[np.isclose(slab["b"], 0.0)].sort_values("q_m")
    ax.plot(slab["q_m"], slab["bid"], marker="o", ms=3, label="bid")
    ax.plot(slab["q_m"], slab["ask"], marker="s", ms=3, label="ask")
    ax.set_xlabel("taker inventory q_m")
    ax.set_ylabel("quote offset ($)")
    ax.set_title(f"taker quotes at b=0, t={t:g}")
    ax.legend()


def _fig_maker_quote_slices(a: ArtifactSet, ax, qs, bs):
    t = a.times[0]
    slab = a.slab("quotes_maker.csv", t).sort_values("q")
    ax.plot(slab["q"], slab["bid"], marker="o", ms=3, label="bid")
    ax.plot(slab["q"], slab["ask"], marker="s", ms=3, label="ask")
    ax.set_xlabel("maker inventory q")
    ax.set_ylabel("quote offset ($)")
    ax.set_title(f"maker quotes at t={t:g}")
    ax.legend()


def _fig_maker_quote_surface(a: ArtifactSet, ax, qs, bs):
    m = a.pivot_t_q("quotes_maker.csv", "bid")
    _heat(ax, m.to_numpy().T, m.index.to_numpy(), m.columns.to_numpy(),
          "time t", "maker inventory q", "maker bid quote over time")


def _fig_maker_value_curve(a: ArtifactSet, ax, qs, bs):
    t = a.times[0]
    slab = a.slab("w_maker.csv", t).sort_values("q")
    ax.plot(slab["q"], slab["W"], marker="o", ms=3)
    ax.set_xlabel("maker inventory q")
    ax.set_ylabel("W")
    ax.set_title(f"maker value at t={t:g}")


def _fig_signal_marginal_evolution(a: ArtifactSet, ax, qs, bs):
    times = a.times
    picks = times[np.unique(np.linspace(0, len(times) - 1, 5).astype(int))]
    for t in picks:
        m = a.pivot_qm_b("p_mass.csv", "p", t)
        ax.plot(m.columns, m.sum(axis=0), marker="o", ms=3, label=f"t = {t:g}")
    ax.set_xlabel("signal b")
    ax.set_ylabel("marginal p(b)")
    ax.set_title("signal marginal over time")
    ax.legend()


FIGURES = (
    (PlotSpec("mass_joint_surface", "surface", ("p_mass.csv",)),
     _fig_mass_joint_surface),
    (PlotSpec("mass_conditional_qm_given_b", "slice", ("p_mass.csv",),
              conditions_b=True), _fig_mass_conditional_qm_given_b),
    (PlotSpec("mass_conditional_b_given_qm", "slice", ("p_mass.csv",),
              conditions_qm=True), _fig_mass_conditional_b_given_qm),
    (PlotSpec("mass_marginal_evolution", "slice", ("p_mass.csv",)),
     _fig_mass_marginal_evolution),
    (PlotSpec("signal_marginal_evolution", "slice", ("p_mass.csv",)),
     _fig_signal_marginal_evolution),
    (PlotSpec("taker_value_surface", "surface", ("w_taker.csv",)),
     _fig_taker_value_surface),
    (PlotSpec("taker_value_slices_b", "slice", ("w_taker.csv",),
              conditions_b=True), _fig_taker_value_slices_b),
    (PlotSpec("taker_value_slices_qm", "slice", ("w_taker.csv",),
              conditions_qm=True), _fig_taker_value_slices_qm),
    (PlotSpec("taker_bid_surface", "surface", ("quotes_taker.csv",)),
     _fig_taker_bid_surface),
    (PlotSpec("taker_ask_surface", "surface", ("quotes_taker.csv",)),
     _fig_taker_ask_surface),
    (PlotSpec("taker_quote_slices", "slice", ("quotes_taker.csv",)),
     _fig_taker_quote_slices),
    (PlotSpec("maker_quote_surface", "surface", ("quotes_maker.csv",)),
     _fig_maker_quote_surface),
    (PlotSpec("maker_quote_slices", "slice", ("quotes_maker.csv",)),
     _fig_maker_quote_slices),
    (PlotSpec("maker_value_curve", "curve", ("w_maker.csv",)),
     _fig_maker_value_curve),
)


def render_all(artifact_dir: str | Path, out_dir: str | Path,
               qm_slices=DEFAULT_QM_SLICES,
               b_slices=DEFAULT_B_SLICES) -> list[Path]:
    """Render every figure in the catalogue; returns the written paths."""
    arts = ArtifactSet.load(artifact_dir)
    arts.require_on_grid(qm_slices, arts.qm_grid, "q_m")
    arts.require_on_grid(b_slices, arts.b_grid, "b")
    if not np.isclose(arts.b_grid, 0.0).any():
        raise ArtifactError("conditioning value(s) not on the b grid: b=0 "
                            f"(nearest available: "
                            f"{arts.b_grid[np.abs(arts.b_grid).argmin()]:g})")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    with plt.style.context(_STYLE):
        for spec, draw in FIGURES:
            fig, ax = plt.subplots()
            try:
                draw(arts, ax, qm_slices, b_slices)
                path = spec.output_path(out)
                fig.savefig(path, metadata=arts.metadata(spec.inputs))
            finally:
                plt.close(fig)
            written.append(path)
    return written
