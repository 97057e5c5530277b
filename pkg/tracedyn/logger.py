"""Configures the logger for tracedyn."""

import logging
from rich.console import Console
from rich.logging import RichHandler

formatter = logging.Formatter("%(message)s")
handler = RichHandler(
    level=logging.NOTSET, markup=True, show_path=False, console=Console(stderr=True)
)
handler.setFormatter(formatter)

logger = logging.getLogger("tracedyn")
logger.addHandler(handler)
logger.setLevel(logging.WARNING)


def set_verbosity(verbose=0):
    """Set the package log level from a verbosity count.

    Parameters
    ----------
    verbose : int
        0 logs warnings only, 1 adds progress information and 2 or more
        enables debug output.
    """
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]
    logger.setLevel(level)
    return level
