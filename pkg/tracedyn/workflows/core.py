"""Makes it easier to run independent computations in parallel."""

import logging
from collections import abc
from multiprocessing import get_context
from rich.progress import track
import warnings

logger = logging.getLogger("tracedyn")


def workflow(func, args, threads=1, description=None, progress=True):
    """Run a function over several arguments, optionally in parallel.

    Results are returned in the order of `args` regardless of the number of
    workers, so reports built from them are deterministic.

    Arguments
    ---------
    func : function
        A top-level function that takes a single argument (can be any
        picklable object) and performs the computation for it.
    args : array-like object
        An array-like object (list, tuple, numpy array, pandas Series, etc.)
        that contains the arguments.
    threads : positive int
        How many arguments to process in parallel at once.
    description : str
        The description shown in front of the progress bar.
    progress : bool
        Whether to show a progress bar.
    """
    if not isinstance(args, abc.Sized):
        raise ValueError("`args` must have a length.")
    if description is None:
        description = "Running"

    # Don't generate overhead if single thread
    if threads <= 1 or len(args) < 2:
        it = map(func, args)
        if progress:
            it = track(it, total=len(args), description=description)
        return list(it)

    level = logger.level
    logger.setLevel("ERROR")
    # We don't use the context  manager because of
    # https://pytest-cov.readthedocs.io/en/latest/subprocess-support.html
    pool = get_context("spawn").Pool(processes=threads, maxtasksperchild=1)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            it = pool.imap(func, args)
            if progress:
                it = track(it, total=len(args), description=description)
            results = list(it)
    finally:
        pool.close()
        pool.join()
        logger.setLevel(level)

    return results
