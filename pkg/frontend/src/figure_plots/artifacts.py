"""Load solve artifacts (documented CSV schemas) for plotting.

This package is a pure view over the CSV files written by the solver CLI;
it never recomputes model quantities. Every loaded file's sha256 is kept
so renderers can stamp their inputs into the image metadata.

Expected files in an artifact directory:

    w_maker.csv       t,q,W
    w_taker.csv       t,q_m,b,W_m
    p_mass.csv        t,q_m,b,p
    quotes_maker.csv  t,q,bid,ask,inert_bid,inert_ask
    quotes_taker.csv  t,q_m,b,bid,ask,inert_bid,inert_ask
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

__all__ = ["ArtifactError", "ArtifactSet", "CSV_SCHEMAS"]

CSV_SCHEMAS = {
    "w_maker.csv": ["t", "q", "W"],
    "w_taker.csv": ["t", "q_m", "b", "W_m"],
    "p_mass.csv": ["t", "q_m", "b", "p"],
    "quotes_maker.csv": ["t", "q", "bid", "ask", "inert_bid", "inert_ask"],
    "quotes_taker.csv": ["t", "q_m", "b", "bid", "ask", "inert_bid",
                         "inert_ask"],
}


class ArtifactError(ValueError):
    """Missing or malformed solve artifact."""


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class ArtifactSet:
    """All CSV artifacts of one solve run, plus their content hashes."""

    directory: Path
    tables: dict[str, pd.DataFrame] = field(default_factory=dict)
    hashes: dict[str, str] = field(default_factory=dict)

    @classmethod
    def load(cls, directory: str | Path) -> "ArtifactSet":
        directory = Path(directory)
        out = cls(directory=directory)
        for name, columns in CSV_SCHEMAS.items():
            path = directory / name
            if not path.exists():
                raise ArtifactError(
                    f"missing solve artifact: {path} (run the solver CLI "
                    f"'solve' verb to produce it)")
            df = pd.read_csv(path)
            missing = [c for c in columns if c not in df.columns]
            if missing:
                raise ArtifactError(
                    f"artifact {path} lacks column(s) {', '.join(missing)} "
                    f"(expected schema: {','.join(columns)})")
            out.tables[name] = df
            out.hashes[name] = _sha256(path)
        return out

    # ---- grid accessors -------------------------------------------------
    def _axis(self, table: str, col: str) -> np.ndarray:
        return np.sort(self.tables[table][col].unique())

    @property
    def times(self) -> np.ndarray:
        return self._axis("p_mass.csv", "t")

    @property
    def qm_grid(self) -> np.ndarray:
        return self._axis("p_mass.csv", "q_m")

    @property
    def b_grid(self) -> np.ndarray:
        return self._axis("p_mass.csv", "b")

    @property
    def q_grid(self) -> np.ndarray:
        return self._axis("w_maker.csv", "q")

    def require_on_grid(self, values, grid: np.ndarray, axis: str) -> None:
        """Conditioning values must hit grid nodes exactly (lot multiples)."""
        grid = np.asarray(grid, dtype=float)
        bad = [v for v in values
               if not np.isclose(grid, float(v)).any()]
        if bad:
            nearest = {v: grid[np.abs(grid - float(v)).argmin()] for v in bad}
            listing = "; ".join(f"{axis}={v} (nearest available: "
                                f"{nearest[v]:g})" for v in bad)
            raise ArtifactError(
                f"conditioning value(s) not on the {axis} grid: {listing}")

    # ---- slicing helpers -------------------------------------------------
    def slab(self, table: str, t: float) -> pd.DataFrame:
        df = self.tables[table]
        return df[np.isclose(df["t"], t)]

    def pivot_qm_b(self, table: str, value: str, t: float) -> pd.DataFrame:
        """(q_m x b) matrix of `value` at time slice t."""
        return self.slab(table, t).pivot(index="q_m", columns="b",
                                         values=value).sort_index()

    def pivot_t_q(self, table: str, value: str) -> pd.DataFrame:
        """(t x q) matrix of `value` over all saved slices."""
        return self.tables[table].pivot(index="t", columns="q",
                                        values=value).sort_index()

    def metadata(self, inputs: tuple[str, ...]) -> dict[str, str]:
        """PNG text-chunk payload stamping which bytes produced a figure."""
        return {f"input-sha256:{name}": self.hashes[name] for name in inputs}
