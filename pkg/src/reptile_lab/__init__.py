"""reptile-lab: exact verification toolkit for the reptile-simplex case analysis."""

__version__ = "0.1.0"
