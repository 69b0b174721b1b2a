"""Desk-scale UDA lab: self-training segmentation on procedural shape scenes."""

__version__ = "0.1.0"

from .data import IGNORE

__all__ = ["IGNORE", "__version__"]
