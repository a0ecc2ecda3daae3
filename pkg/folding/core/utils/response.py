# folding/core/utils/response.py

import json
from typing import Any, Optional

from pydantic import BaseModel

from folding.core.config import settings


def standard_response(
    message: str, status: str = "success", data: Optional[Any] = None
) -> dict:
    """Envelope used for every JSON document the CLI writes.

    Carries no timestamp so that output files stay byte-deterministic.
    """
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json")
    return {
        "info": f"{settings.APP_NAME} {settings.APP_VERSION}",
        "status": status,
        "message": message,
        "data": data,
    }


def render_json(payload: Any) -> str:
    """Serialize a payload with sorted keys and a trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
