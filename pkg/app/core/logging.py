"""
Logging setup shared by the CLI and the API
"""

import logging
import sys
from typing import Optional, TextIO

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class StderrHandler(logging.StreamHandler):
    """StreamHandler writing to a bound stream, or to sys.stderr at emit time"""

    def __init__(self, target: Optional[TextIO] = None):
        super().__init__()
        self.target = target

    @property
    def stream(self):
        return self.target if self.target is not None else sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def configure_logging(level: str = "WARNING", stream: Optional[TextIO] = None) -> None:
    """Route package logs to stream (default: sys.stderr) at the given level"""
    root = logging.getLogger("app")
    root.setLevel(level.upper())

    for handler in root.handlers:
        if isinstance(handler, StderrHandler):
            handler.target = stream
            return

    handler = StderrHandler(stream)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
