"""Published JSON schemas for the serialized types and the CLI ``--json`` outputs."""

import json
from importlib import resources


def load_schemas() -> dict:
    return json.loads(resources.files(__package__).joinpath("schemas.json").read_text(encoding="utf-8"))


def schema_for(name: str) -> dict:
    """A standalone schema for ``$defs/<name>`` that still resolves sibling refs."""
    doc = load_schemas()
    if name not in doc["$defs"]:
        raise KeyError(f"no schema named {name!r}")
    return {"$schema": doc["$schema"], "$defs": doc["$defs"], "$ref": f"#/$defs/{name}"}
