"""Problem and report documents (JSON).

Problem schema::

    {
      "dim": int,
      "notation": "(0,0,0,12)",                # exactly one of these two
      "structure_constants": [[i, j, k, "p/q"], ...],
      "metric": [[...], ...],                  # optional, default identity
      "J": [[...], ...]                        # optional, default standard pairing
    }

Scalars are integers or "p/q" strings in exact mode (floats are rejected so
documents stay lossless); any JSON number is accepted in float mode.
Structure-constant rows use 1-based indices with i < j and give the
coefficient of e_k in [e_i, e_j].  Reports are dumped with sorted keys and
fixed separators, so identical inputs yield byte-identical files.
"""

from __future__ import annotations

import json
from typing import Sequence

from .algebra import LieAlgebra
from .notation import parse_notation, serialize_notation
from .scalars import format_scalar, identity_matrix, parse_scalar
from .structures import AlmostHermitianStructure, standard_j, validate_structure


class DocumentError(ValueError):
    """Malformed problem document."""


def _parse_matrix(data, dim: int, what: str, mode: str) -> list:
    if (
        not isinstance(data, list)
        or len(data) != dim
        or any(not isinstance(row, list) or len(row) != dim for row in data)
    ):
        raise DocumentError("%s must be a %dx%d array" % (what, dim, dim))
    try:
        return [[parse_scalar(x, mode) for x in row] for row in data]
    except (TypeError, ValueError) as exc:
        raise DocumentError("bad scalar in %s: %s" % (what, exc)) from None


def problem_from_dict(data: dict, mode: str = "exact", eps: float | None = None):
    """Validated (LieAlgebra, AlmostHermitianStructure) from a problem dict."""
    if not isinstance(data, dict):
        raise DocumentError("problem document must be a JSON object")
    if "dim" not in data or not isinstance(data["dim"], int) or data["dim"] < 1:
        raise DocumentError("missing or invalid 'dim'")
    dim = data["dim"]
    has_notation = "notation" in data
    has_constants = "structure_constants" in data
    if has_notation == has_constants:
        raise DocumentError(
            "exactly one of 'notation' and 'structure_constants' is required"
        )
    check_eps = None if mode == "exact" else eps
    if has_notation:
        if not isinstance(data["notation"], str):
            raise DocumentError("'notation' must be a string")
        algebra = parse_notation(data["notation"], check_eps)
        if algebra.dim != dim:
            raise DocumentError(
                "notation has %d slots but dim is %d" % (algebra.dim, dim)
            )
        if mode == "float":
            algebra = algebra.to_float()
    else:
        rows = data["structure_constants"]
        if not isinstance(rows, list):
            raise DocumentError("'structure_constants' must be a list")
        c = [
            [[parse_scalar(0, mode) for _ in range(dim)] for _ in range(dim)]
            for _ in range(dim)
        ]
        for row in rows:
            if not isinstance(row, list) or len(row) != 4:
                raise DocumentError(
                    "structure constant rows must be [i, j, k, value]"
                )
            i, j, k, value = row
            if not all(isinstance(x, int) for x in (i, j, k)):
                raise DocumentError("structure constant indices must be integers")
            if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                raise DocumentError(
                    "structure constant indices out of range in %r" % (row,)
                )
            if i >= j:
                raise DocumentError(
                    "structure constants must be given with i < j, got %r" % (row,)
                )
            try:
                v = parse_scalar(value, mode)
            except (TypeError, ValueError) as exc:
                raise DocumentError("bad scalar in %r: %s" % (row, exc)) from None
            c[i - 1][j - 1][k - 1] = c[i - 1][j - 1][k - 1] + v
            c[j - 1][i - 1][k - 1] = c[j - 1][i - 1][k - 1] - v
        algebra = LieAlgebra.from_structure_constants(dim, c, check_eps)
    metric = (
        _parse_matrix(data["metric"], dim, "metric", mode)
        if "metric" in data
        else identity_matrix(dim)
    )
    j = (
        _parse_matrix(data["J"], dim, "J", mode)
        if "J" in data
        else standard_j(dim)
    )
    if mode == "float":
        metric = [[float(x) for x in row] for row in metric]
        j = [[float(x) for x in row] for row in j]
    structure = validate_structure(dim, metric, j, check_eps)
    return algebra, structure


def load_problem(path, mode: str = "exact", eps: float | None = None):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError("invalid JSON: %s" % exc) from None
    return problem_from_dict(data, mode, eps)


def matrix_to_json(m: Sequence) -> list:
    return [
        [x if isinstance(x, float) else format_scalar(x) for x in row]
        for row in m
    ]


def problem_to_dict(
    algebra: LieAlgebra,
    structure: AlmostHermitianStructure | None = None,
    prefer_notation: bool = True,
) -> dict:
    doc: dict = {"dim": algebra.dim}
    if prefer_notation and algebra.is_exact():
        doc["notation"] = serialize_notation(algebra)
    else:
        rows = []
        n = algebra.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    v = algebra.c[i][j][k]
                    if not v == 0:
                        rows.append(
                            [i + 1, j + 1, k + 1,
                             v if isinstance(v, float) else format_scalar(v)]
                        )
        doc["structure_constants"] = rows
    if structure is not None:
        doc["metric"] = matrix_to_json(structure.g)
        doc["J"] = matrix_to_json(structure.J)
    return doc


def save_problem(
    path,
    algebra: LieAlgebra,
    structure: AlmostHermitianStructure | None = None,
    prefer_notation: bool = True,
) -> None:
    dump_json(path, problem_to_dict(algebra, structure, prefer_notation))


def dumps_json(data) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def dump_json(path, data) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_json(data))


def save_report(path, report: dict) -> None:
    dump_json(path, report)
