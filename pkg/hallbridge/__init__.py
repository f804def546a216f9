from . import (
    blocks,
    cli,
    due,
    errors,
    io,
    objects,
    operations,
    references,
    utils,
    workflow,
)
from ._version import __version__
