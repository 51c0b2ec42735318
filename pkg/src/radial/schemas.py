"""JSON Schemas for the documents this package writes."""

_DECIMAL = {"type": "string", "pattern": r"^-?[0-9]+$"}

ALGEBRA_ELEMENT = {
    "type": "object",
    "required": ["N", "terms"],
    "additionalProperties": False,
    "properties": {
        "N": {"type": "integer", "minimum": 1},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["word", "coeff"],
                "additionalProperties": False,
                "properties": {"word": {"type": "string", "pattern": "^(1|[a-zA-Z]+)$"}, "coeff": _DECIMAL},
            },
        },
    },
}

RADIAL_VECTOR = {
    "type": "object",
    "required": ["N", "mode", "a", "b", "coeffs"],
    "additionalProperties": False,
    "properties": {
        "N": {"type": "integer", "minimum": 1},
        "mode": {"enum": ["paper-text", "verified", "custom"]},
        "a": _DECIMAL,
        "b": _DECIMAL,
        "coeffs": {"type": "array", "items": _DECIMAL},
    },
}

COMPARISON_RECORD = {
    "type": "object",
    "required": ["N", "k", "n", "mode", "agrees", "basis_diffs", "trace_triple"],
    "properties": {
        "N": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 0},
        "n": {"type": "integer", "minimum": 0},
        "mode": {"enum": ["paper-text", "verified", "custom"]},
        "agrees": {"type": "boolean"},
        "basis_diffs": {
            "type": "object",
            "patternProperties": {
                "^[0-9]+$": {
                    "type": "object",
                    "required": ["engine", "oracle"],
                    "properties": {"engine": _DECIMAL, "oracle": _DECIMAL, "match": {"type": "boolean"}},
                }
            },
            "additionalProperties": False,
        },
        "trace_triple": {
            "type": "object",
            "required": ["paper", "engine", "oracle"],
            "properties": {"paper": _DECIMAL, "engine": _DECIMAL, "oracle": _DECIMAL},
        },
        "structure_error": {"type": ["string", "null"]},
    },
}

REPORT = {
    "type": "object",
    "required": ["grid", "records", "claims"],
    "additionalProperties": False,
    "properties": {
        "grid": {"type": "object"},
        "records": {"type": "array", "items": COMPARISON_RECORD},
        "claims": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["claim_id", "paper_ref", "status", "witness"],
                "properties": {
                    "claim_id": {"type": "string"},
                    "paper_ref": {"type": "string"},
                    "status": {"enum": ["CONFIRMED", "REFUTED", "AMBIGUOUS"]},
                    "witness": {"type": "object"},
                },
            },
        },
    },
}
