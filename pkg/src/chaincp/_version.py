"""Single source for the version string (keep pyproject.toml in step)."""

__version__ = "0.1.0"
