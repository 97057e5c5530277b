"""Classes for reporting and storing results of the estimators."""

from __future__ import annotations

from dataclasses import dataclass, field
import json
from typing import Optional

import pandas as pd

from ..constants import SCHEMA_VERSION

FORMATS = ("json", "csv", "text")


def _flatten(data: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in data.items():
        name = "%s.%s" % (prefix, key) if prefix else str(key)
        if isinstance(value, dict) and value:
            flat.update(_flatten(value, name))
        else:
            flat[name] = value
    return flat


def _text_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.6f" % value
    if isinstance(value, (list, tuple)):
        return "[%s]" % ", ".join(_text_value(v) for v in value)
    return str(value)


@dataclass
class Report:
    """The output of a single command.

    Attributes
    ----------
    command : str
        The command that produced the report.
    data : dict
        JSON-serializable results.
    verdict : str or None
        "pass" or "fail" for commands that check something.
    table : pandas.DataFrame
        Optional tabular form used for CSV output.
    text : str
        Optional plain text form replacing the key-value listing.
    """

    command: str
    data: dict
    verdict: Optional[str] = None
    table: Optional[pd.DataFrame] = field(default=None, repr=False, compare=False)
    text: Optional[str] = field(default=None, repr=False, compare=False)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.verdict not in (None, "pass", "fail"):
            raise ValueError("verdict must be `pass` or `fail`, got `%s`." % self.verdict)

    @property
    def passed(self) -> bool:
        return self.verdict != "fail"

    def to_dict(self) -> dict:
        out = {"schema_version": self.schema_version, "command": self.command}
        out.update(self.data)
        if self.verdict is not None:
            out["verdict"] = self.verdict
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_frame(self) -> pd.DataFrame:
        """The report as a table, one row per item or a single summary row."""
        if self.table is not None:
            return self.table
        flat = _flatten(self.to_dict())
        row = {}
        for key, value in sorted(flat.items()):
            row[key] = _text_value(value) if isinstance(value, (list, tuple)) else value
        return pd.DataFrame([row])

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator="\n")

    def to_text(self) -> str:
        if self.text is not None:
            return self.text
        flat = _flatten(self.to_dict())
        return "\n".join("%s: %s" % (k, _text_value(v)) for k, v in sorted(flat.items()))

    def render(self, fmt: str = "json") -> str:
        """Serialize in one of the formats json, csv or text."""
        if fmt not in FORMATS:
            raise ValueError("unknown format `%s`, use one of %s." % (fmt, FORMATS))
        return getattr(self, "to_" + fmt)()

    def save(self, path: str):
        """Save the report as a JSON file.

        Arguments
        ---------
        path : str
            A filepath for the generated file. Should end in `.json`.
        """
        with open(path, "w") as outfile:
            outfile.write(self.to_json())

    @staticmethod
    def load(path: str) -> Report:
        """Load a report from a JSON file.

        Arguments
        ---------
        path : str
            Path to a saved `Report`.

        Returns
        -------
        Report
            The loaded report without its tabular form.
        """
        with open(path) as infile:
            data = json.load(infile)
        version = data.pop("schema_version", None)
        if version != SCHEMA_VERSION:
            raise ValueError(
                "report has schema version %s but %d is supported." % (version, SCHEMA_VERSION)
            )
        command = data.pop("command")
        verdict = data.pop("verdict", None)
        return Report(command, data, verdict)


def save_report(report: Report, path: str):
    """Save a report to a JSON file."""
    report.save(path)


def load_report(path: str) -> Report:
    """Load a report from a JSON file."""
    return Report.load(path)
