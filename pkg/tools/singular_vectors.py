"""
Singular vector search and verification in V(k, C).
"""

import json
from fractions import Fraction
from typing import Dict, Optional

from pydantic import ValidationError

from core.affine import Level
from core.config import get_settings
from core.errors import StateFileError
from core.singular import SingularSpec, find_singular, verify_singular
from core.vacuum import State, Weight, apply_to_vacuum, homogeneous_weight
from cli.expression import parse_state, render_element
from schemas.report import SavedState, element_to_terms, terms_to_element

settings = get_settings()


def find_singular_vectors(
    level: Level,
    degree: Optional[int] = None,
    w1: Optional[Fraction] = None,
    w2: Optional[Fraction] = None,
    threads: Optional[int] = None,
) -> Dict:
    """
    Basis of singular vectors at a weight of V(k, C).

    Args:
        level: Admissible level
        degree, w1, w2: Target weight; defaults to the closed-form singular weight

    Returns:
        Dict with dimension, weight and the basis as JSON terms
    """
    target = None
    if degree is not None or w1 is not None or w2 is not None:
        if degree is None or w1 is None or w2 is None:
            raise ValueError("--degree, --w1 and --w2 must be given together")
        target = Weight(Fraction(w1), Fraction(w2), degree)
    spec = SingularSpec.for_level(level, target)
    states = find_singular(spec, threads)

    return {
        "status": "ok" if states else "empty",
        "level": str(level),
        "weight": {"w1": str(spec.target.w1), "w2": str(spec.target.w2), "degree": spec.target.degree},
        "dimension": len(states),
        "basis": [[t.model_dump(mode="json") for t in element_to_terms(s)] for s in states],
        "text": "\n".join(
            [f"level {level}, weight {spec.target}: dimension {len(states)}"]
            + [f"v{i + 1} = {render_element(s)}" for i, s in enumerate(states)]
        ),
    }


def load_state(path: str, level: Level) -> State:
    """
    Read a saved state, rejecting schema or level mismatches.
    """
    try:
        with open(path, encoding="utf-8") as f:
            saved = SavedState.model_validate(json.load(f))
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise StateFileError(f"cannot read state file {path}: {e}") from e
    if saved.schema_version != settings.STATE_SCHEMA_VERSION:
        raise StateFileError(
            f"{path} has schema version {saved.schema_version}, expected {settings.STATE_SCHEMA_VERSION}"
        )
    if Level.of(saved.level) != level:
        raise StateFileError(f"{path} was saved at level {saved.level}, not {level}")
    return apply_to_vacuum(terms_to_element(saved.state), level)


def save_state(path: str, state: State):
    saved = SavedState(
        schema_version=settings.STATE_SCHEMA_VERSION,
        level=str(state.level),
        state=element_to_terms(state),
    )
    with open(path, "w", encoding="utf-8") as f:
        f.write(saved.model_dump_json(indent=settings.JSON_INDENT))
        f.write("\n")


def verify_singular_state(level: Level, in_path: Optional[str] = None, expr: Optional[str] = None) -> Dict:
    """
    Check whether e1(0), e2(0) and f12(1) all kill a state.

    Args:
        level: Level of the module
        in_path: Saved state JSON
        expr: Alternatively, the state as text

    Returns:
        Dict with the verdict and the state's weight
    """
    if in_path:
        state = load_state(in_path, level)
    elif expr:
        state = parse_state(expr, level)
    else:
        raise ValueError("singular verify needs --in or --expr")

    weight = homogeneous_weight(state)
    singular = verify_singular(state)
    return {
        "level": str(level),
        "weight": {"w1": str(weight.w1), "w2": str(weight.w2), "degree": weight.degree},
        "singular": singular,
        "text": f"{'singular' if singular else 'not singular'} at weight {weight}",
    }
