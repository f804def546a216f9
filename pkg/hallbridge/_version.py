"""Version of `hallbridge`."""

__version__ = "0.1.0"
