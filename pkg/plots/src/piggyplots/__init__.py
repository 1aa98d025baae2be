"""Figure rendering for piggyqec experiment CSVs."""

from .render import FigureSpec, SchemaError, Series, load_series, render

__all__ = ["FigureSpec", "SchemaError", "Series", "load_series", "render"]
