"""Batch figure renderer over market-making solve CSV artifacts."""

from .artifacts import ArtifactError, ArtifactSet, CSV_SCHEMAS
from .plots import FIGURES, PlotSpec, conditional, render_all

__all__ = ["ArtifactError", "ArtifactSet", "CSV_SCHEMAS", "FIGURES",
           "PlotSpec", "conditional", "render_all"]

__version__ = "0.1.0"
