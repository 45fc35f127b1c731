"""Allow ``python -m telespline`` as an alias for the console script."""

from .cli import entrypoint

entrypoint()
