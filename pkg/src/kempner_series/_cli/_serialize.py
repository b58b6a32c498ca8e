from enum import Enum
from fractions import Fraction
from typing import Any

from kempner_series._utils import int_to_decimal


def serialize_output(output: Any) -> Any:
    """
    Recursively serialize a report object into JSON-ready values.

    Args:
        output: The object to serialize

    Returns:
        Serialized output; big integers become decimal strings and
        fractions become "p/q" strings.
    """
    if output is None:
        return None

    # Handle Pydantic models
    if hasattr(output, "model_dump"):
        return serialize_output(output.model_dump(mode="json", by_alias=True))

    # Handle dictionaries
    elif isinstance(output, dict):
        return {k: serialize_output(v) for k, v in output.items()}

    # Handle lists and tuples
    elif isinstance(output, (list, tuple)):
        return [serialize_output(item) for item in output]

    # Handle Enums
    elif isinstance(output, Enum):
        return output.value

    elif isinstance(output, Fraction):
        return f"{output.numerator}/{output.denominator}"

    # Integers beyond float range stay exact as strings
    elif isinstance(output, int) and not isinstance(output, bool):
        return output if abs(output) < 2**53 else int_to_decimal(output)

    # Return primitive types as is
    return output


def flatten_row(row: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    """Flatten nested report fields into dotted CSV columns."""
    flat: dict[str, Any] = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten_row(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = " ".join(str(item) for item in value)
        elif value is None:
            flat[name] = ""
        elif isinstance(value, bool):
            flat[name] = "true" if value else "false"
        else:
            flat[name] = value
    return flat
