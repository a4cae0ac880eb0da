import json
from typing import Any, Callable, Optional


def error(message: str, error_detail: str | None = None) -> dict:
    """
    Create an error payload.

    Args:
        message: Error message
        error_detail: Additional error details (optional)

    Returns:
        dict: Standardized error payload
    """
    response = {"success": False, "message": message}
    if error_detail:
        response["error"] = error_detail
    return response


def emit(fmt: str, data: Any, render_text: Optional[Callable[[Any], str]] = None) -> str:
    """
    Serialize command output deterministically.

    JSON keeps the insertion order of the payload (callers insert in
    lexicographic order) and renders exact values as strings.

    Args:
        fmt: "json" or "text"
        data: Payload
        render_text: Text renderer; JSON is used when absent

    Returns:
        str: Output terminated by a newline
    """
    if fmt == "text" and render_text is not None:
        text = render_text(data)
    elif isinstance(data, str):
        text = data
    else:
        text = json.dumps(data, indent=2, default=str, ensure_ascii=False)
    return text if text.endswith("\n") else text + "\n"
