"""Error types for the figure scripts.

The categories mirror the simulator CLI's error contract so that shell
pipelines can treat both tools uniformly, but this package deliberately does
not import the simulator: the coupling between the two is the file formats,
nothing else.
"""


class FigureError(Exception):
    """Base class; ``category`` feeds the CLI error JSON."""

    category = "figure"


class ParseError(FigureError):
    """An input file is missing, unreadable, or not valid CSV/JSON."""

    category = "parse"


class SchemaError(FigureError):
    """An input file parsed but does not have the expected shape:
    missing columns, no data rows, or values of the wrong kind."""

    category = "schema"
