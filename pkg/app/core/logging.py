import logging
import sys
from typing import Optional

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class StderrHandler(logging.StreamHandler):
    """Writes to whatever ``sys.stderr`` is at emit time."""

    def __init__(self) -> None:
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value) -> None:
        # always follows sys.stderr
        pass


_handler: Optional[StderrHandler] = None


def configure_logging(level: str = "WARNING") -> None:
    """Send library logs to stderr; stdout stays reserved for results."""
    global _handler
    root = logging.getLogger("app")
    root.setLevel(level.upper())
    if _handler is None:
        _handler = StderrHandler()
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    if _handler not in root.handlers:
        root.addHandler(_handler)
