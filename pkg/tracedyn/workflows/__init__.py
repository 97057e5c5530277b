"""Init file for tracedyn workflows.

The comparison pipeline lives in `tracedyn.workflows.compare` and is not
imported here since it depends on the estimator modules which use `workflow`.
"""

from .core import workflow
from .results import Report, save_report, load_report

__all__ = ("workflow", "Report", "save_report", "load_report")
