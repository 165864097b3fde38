"""Logging setup for the command line. The library itself never configures logging."""
import logging
from typing import Optional

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

_configured = False


def setup_logging(level: Optional[str] = None) -> None:
    """Configure the root logger once; later calls only adjust the level"""
    global _configured
    from .config import settings

    resolved = (level or settings.log_level).upper()
    if not _configured:
        logging.basicConfig(level=resolved, format=LOG_FORMAT)
        _configured = True
    else:
        logging.getLogger().setLevel(resolved)
