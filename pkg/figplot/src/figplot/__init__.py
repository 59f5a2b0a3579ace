"""SVG panel rendering for qdimer sweep CSV files."""

from .panels import PANELS, csv_name
from .reading import REQUIRED_COLUMNS, SchemaError, load_sweep
from .render import output_paths, render

__version__ = "0.1.0"

__all__ = [
    "PANELS",
    "REQUIRED_COLUMNS",
    "SchemaError",
    "csv_name",
    "load_sweep",
    "output_paths",
    "render",
]
