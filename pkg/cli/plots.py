import logging
import os
from typing import Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from .output import Table

logger = logging.getLogger(__name__)

TEMPLATE_DIR = os.path.join(os.path.dirname(__file__), "templates")


class PlotScriptWriter:
    """Renders gnuplot scripts that read a command's data file."""

    TEMPLATES = {
        "cdf": "cdf.gp.j2",
        "roc": "roc.gp.j2",
        "cfar": "cfar.gp.j2",
        "robustness": "robustness.gp.j2",
    }

    def __init__(self, template_path: str = TEMPLATE_DIR):
        self.logger = logging.getLogger(self.__class__.__name__)
        self.env = Environment(loader=FileSystemLoader(template_path), undefined=StrictUndefined,
                               keep_trailing_newline=True)

    def render(self, kind: str, table: Table, data_path: str, fmt: str = "csv",
               title: Optional[str] = None) -> str:
        """
        Args:
            kind: One of ``cdf``, ``roc``, ``cfar``, ``robustness``
            table: Result whose columns the script plots
            data_path: Path of the data file the script reads
            fmt: Format of the data file
            title: Comment line at the top of the script

        Returns:
            str: gnuplot script text
        """
        if kind not in self.TEMPLATES:
            raise KeyError(f"no plot template for {kind!r}")
        template = self.env.get_template(self.TEMPLATES[kind])
        columns = {name: index + 1 for index, name in enumerate(table.columns)}
        return template.render(
            title=title or f"{table.command} ({kind})",
            fmt=fmt,
            data_path=data_path,
            col=columns,
            series=kind,
        )

    def write(self, kind: str, table: Table, data_path: str, script_path: str, fmt: str = "csv",
              title: Optional[str] = None) -> str:
        text = self.render(kind, table, data_path, fmt, title)
        with open(script_path, "w", encoding="utf-8") as handle:
            handle.write(text)
        self.logger.info(f"Wrote gnuplot script {script_path} for {data_path}")
        return text
