import logging
import json
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from core.config import get_settings

settings = get_settings()

# JSON lines on stderr; stdout is reserved for reports
logging.basicConfig(level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO))
logger = logging.getLogger("sl21.audit")

class AuditLog:
    """
    Structured logger for computations.
    Every long-running step leaves one JSON line behind.
    """

    @staticmethod
    def log_event(
        event_type: str,
        details: Dict[str, Any],
        metadata: Optional[Dict[str, Any]] = None
    ):
        """
        Log an event in a structured JSON format.
        """
        entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "event_type": event_type, # e.g. "BASIS_ENUMERATED", "NULLSPACE_COMPUTED"
            "details": details,
            "metadata": metadata or {},
            "service": settings.APP_NAME
        }
        logger.info(json.dumps(entry, default=str))

    @staticmethod
    def log_result(command: str, status: str, summary: Dict[str, Any]):
        """
        Per-command summary line.
        """
        AuditLog.log_event("COMMAND_DONE", {
            "command": command,
            "status": status,
            "summary": summary
        })
