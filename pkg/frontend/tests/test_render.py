"""Renderer tests against synthetic CSV artifacts (no solver involved)."""

import hashlib
from pathlib import Path

import numpy as np
import pandas as pd
import pytest
from PIL import Image

from figure_plots import (ArtifactError, ArtifactSet, FIGURES, conditional,
                          render_all)
from figure_plots.cli import main

TIMES = (0.0, 0.5, 1.0)
QM = np.arange(-80.0, 81.0, 20.0)
B = np.arange(-2.0, 3.0, 1.0)
Q = np.arange(-40.0, 41.0, 20.0)


def make_artifacts(root: Path) -> Path:
    """Smooth synthetic fields on a small grid, in the documented schemas."""
    root.mkdir(parents=True, exist_ok=True)
    rows_wt, rows_p, rows_qt = [], [], []
    for t in TIMES:
        # bimodal in q_m at b=0 so the conditional plot has two bumps
        for qm in QM:
            for b in B:
                p = (np.exp(-((qm - 40) / 30) ** 2) +
                     np.exp(-((qm + 40) / 30) ** 2)) * np.exp(-(b / 1.5) ** 2)
                rows_p.append((t, qm, b, p))
                rows_wt.append((t, qm, b, 100 - 0.001 * qm ** 2 + abs(b)))
                rows_qt.append((t, qm, b, 0.42 + qm / 1000, 0.42 - qm / 1000,
                                int(qm == QM[-1]), int(qm == QM[0])))
    p_df = pd.DataFrame(rows_p, columns=["t", "q_m", "b", "p"])
    p_df["p"] /= p_df.groupby("t")["p"].transform("sum") * 1.0
    p_df.to_csv(root / "p_mass.csv", index=False)
    pd.DataFrame(rows_wt, columns=["t", "q_m", "b", "W_m"]).to_csv(
        root / "w_taker.csv", index=False)
    pd.DataFrame(rows_qt, columns=["t", "q_m", "b", "bid", "ask", "inert_bid",
                                   "inert_ask"]).to_csv(
        root / "quotes_taker.csv", index=False)
    rows_wm = [(t, q, 30 - 0.002 * q ** 2) for t in TIMES for q in Q]
    pd.DataFrame(rows_wm, columns=["t", "q", "W"]).to_csv(
        root / "w_maker.csv", index=False)
    rows_qm = [(t, q, 0.45 + q / 500, 0.45 - q / 500,
                int(q == Q[-1]), int(q == Q[0])) for t in TIMES for q in Q]
    pd.DataFrame(rows_qm, columns=["t", "q", "bid", "ask", "inert_bid",
                                   "inert_ask"]).to_csv(
        root / "quotes_maker.csv", index=False)
    return root


@pytest.fixture(scope="module")
def artifact_dir(tmp_path_factory):
    return make_artifacts(tmp_path_factory.mktemp("arts"))


@pytest.fixture(scope="module")
def rendered(artifact_dir, tmp_path_factory):
    out = tmp_path_factory.mktemp("figs")
    return out, render_all(artifact_dir, out)


def test_renders_full_catalogue(rendered):
    out, written = rendered
    assert len(written) == len(FIGURES) == 14
    for path in written:
        assert path.exists() and path.stat().st_size > 0
    assert sorted(p.name for p in written) == \
           sorted(f"{spec.name}.png" for spec, _ in FIGURES)


def test_images_embed_input_hashes(artifact_dir, rendered):
    out, _ = rendered
    digest = hashlib.sha256((artifact_dir / "p_mass.csv").read_bytes()).hexdigest()
    img = Image.open(out / "mass_joint_surface.png")
    assert img.text["input-sha256:p_mass.csv"] == digest


def test_rendering_is_deterministic(artifact_dir, rendered, tmp_path):
    out, _ = rendered
    render_all(artifact_dir, tmp_path)
    for spec, _ in FIGURES:
        name = f"{spec.name}.png"
        assert (tmp_path / name).read_bytes() == (out / name).read_bytes(), name


def test_missing_artifact_named(tmp_path):
    make_artifacts(tmp_path)
    (tmp_path / "quotes_taker.csv").unlink()
    with pytest.raises(ArtifactError, match="quotes_taker.csv"):
        render_all(tmp_path, tmp_path / "figs")


def test_missing_column_named(tmp_path):
    make_artifacts(tmp_path)
    df = pd.read_csv(tmp_path / "p_mass.csv").drop(columns=["p"])
    df.to_csv(tmp_path / "p_mass.csv", index=False)
    with pytest.raises(ArtifactError, match="p_mass.csv"):
        render_all(tmp_path, tmp_path / "figs")


def test_off_grid_conditioning_lists_nearest(artifact_dir, tmp_path):
    with pytest.raises(ArtifactError, match=r"q_m=-75.*nearest available: -80"):
        render_all(artifact_dir, tmp_path, qm_slices=(-75.0,))


def test_conditional_bimodal_data(artifact_dir):
    # the data behind mass_conditional_qm_given_b at b=0 has two local maxima
    arts = ArtifactSet.load(artifact_dir)
    m = arts.pivot_qm_b("p_mass.csv", "p", TIMES[-1])
    cond = conditional(m.to_numpy(), axis=0)
    j = int(np.nonzero(np.isclose(m.columns.to_numpy(), 0.0))[0][0])
    v = cond[:, j]
    maxima = [i for i in range(len(v))
              if v[i] > (v[i - 1] if i else -np.inf)
              and v[i] > (v[i + 1] if i < len(v) - 1 else -np.inf)]
    assert len(maxima) >= 2


def test_cli_render_and_error_paths(artifact_dir, tmp_path, capsys):
    assert main(["render", "--in", str(artifact_dir),
                 "--out", str(tmp_path / "figs")]) == 0
    assert len(list((tmp_path / "figs").glob("*.png"))) == 14
    assert main(["render", "--in", str(tmp_path / "empty"),
                 "--out", str(tmp_path / "figs2")]) == 2
    assert main(["render", "--in", str(artifact_dir),
                 "--out", str(tmp_path / "figs3"), "--qm", "-75"]) == 2
