# cli/parser.py

"""
Fixture files.

    {
      "name": "sl2",
      "dim": 3,
      "basis": ["f", "h", "e"],
      "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "2"}}, ...],
      "levi": [0, 1, 2],                      optional, basis indices
      "levi_vectors": [["1", "0", "0"], ...], optional, instead of "levi"
      "group_action": {                       optional
        "generators": [[1, 0, 2], [1, 2, 0]],  permutations in array form
        "variables": ["x1", "x2", "x3"],
        "matrices": [[["0", "1"], ...], ...],  optional, column i = image of x_i
        "truncate": 3                          optional
      }
    }

Rationals are strings "p" or "p/q". Errors carry the line (JSON syntax)
or the field path (structure) where the problem sits.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional

from config.settings import DEFAULT_TRUNCATION
from core.errors import InputError
from core.exactlin import parse_rational
from core.liealg import LieAlgebra, Subspace
from smash.hopf import FiniteGroup
from smash.module_algebra import ModuleAlgebraAction, group_action, permutation_matrices


@dataclass
class GroupActionSpec:
    group: FiniteGroup
    variables: List[str]
    matrices: List[List[List[Fraction]]]
    truncate: int

    def build(self, truncate: Optional[int] = None) -> ModuleAlgebraAction:
        degree = self.truncate if truncate is None else truncate
        return group_action(self.group, self.matrices, self.variables, degree)


@dataclass
class AlgebraFile:
    path: str
    algebra: LieAlgebra
    levi: Optional[Subspace] = None
    group_action: Optional[GroupActionSpec] = None


def _require(condition: bool, message: str, where: str):
    if not condition:
        raise InputError(message, where)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_brackets(records: Any, dim: int, where: str) -> dict:
    _require(isinstance(records, list), "must be a list of {i, j, coeffs} records", where)
    brackets = {}
    for pos, record in enumerate(records):
        here = f"{where}[{pos}]"
        _require(isinstance(record, dict), "must be an object", here)
        missing = {"i", "j", "coeffs"} - set(record)
        _require(not missing, f"missing field(s) {sorted(missing)}", here)

        i, j = record["i"], record["j"]
        _require(_is_int(i) and _is_int(j), "i and j must be integers", here)
        _require(i != j, f"i = j = {i}: [e_i, e_i] is always 0 and may not be given", here)
        _require(i < j, f"need i < j, got i={i}, j={j}", here)
        _require(0 <= i and j < dim, f"index out of range for dim {dim}", here)
        _require((i, j) not in brackets, f"duplicate record for ({i}, {j})", here)

        coeffs = record["coeffs"]
        _require(isinstance(coeffs, dict), "coeffs must map index strings to rational strings", f"{here}.coeffs")
        row = {}
        for k_text, value in coeffs.items():
            field_path = f"{here}.coeffs[{k_text!r}]"
            try:
                k = int(k_text)
            except ValueError:
                raise InputError("coefficient key is not an integer index", field_path) from None
            _require(0 <= k < dim, f"coefficient index out of range for dim {dim}", field_path)
            row[k] = parse_rational(value, field_path)
        brackets[(i, j)] = row
    return brackets


def _parse_levi(data: dict, algebra: LieAlgebra) -> Optional[Subspace]:
    if "levi" in data and "levi_vectors" in data:
        raise InputError("give either levi or levi_vectors, not both", "levi")

    if "levi" in data:
        indices = data["levi"]
        _require(isinstance(indices, list) and all(_is_int(i) for i in indices), "must be a list of basis indices", "levi")
        _require(len(set(indices)) == len(indices), "levi indices must be distinct", "levi")
        _require(all(0 <= i < algebra.dim for i in indices), f"levi index out of range for dim {algebra.dim}", "levi")
        return Subspace.from_indices(algebra, indices)

    if "levi_vectors" in data:
        vectors = data["levi_vectors"]
        _require(isinstance(vectors, list), "must be a list of coordinate vectors", "levi_vectors")
        parsed = []
        for pos, vec in enumerate(vectors):
            here = f"levi_vectors[{pos}]"
            _require(isinstance(vec, list) and len(vec) == algebra.dim, f"must have {algebra.dim} entries", here)
            parsed.append([parse_rational(c, f"{here}[{t}]") for t, c in enumerate(vec)])
        return Subspace.spanned_by(algebra, parsed)

    return None


def _parse_group_action(spec: Any, name: str) -> GroupActionSpec:
    where = "group_action"
    _require(isinstance(spec, dict), "must be an object", where)
    generators = spec.get("generators")
    _require(
        isinstance(generators, list) and all(isinstance(g, list) and all(_is_int(x) for x in g) for g in generators),
        "generators must be a list of permutations in array form", f"{where}.generators",
    )
    group = FiniteGroup(f"G({name})", generators)

    variables = spec.get("variables")
    _require(
        isinstance(variables, list) and all(isinstance(v, str) for v in variables) and variables,
        "variables must be a nonempty list of names", f"{where}.variables",
    )
    _require(len(set(variables)) == len(variables), "variable names must be distinct", f"{where}.variables")

    truncate = spec.get("truncate", DEFAULT_TRUNCATION)
    _require(_is_int(truncate) and truncate >= 0, "truncate must be a nonnegative integer", f"{where}.truncate")

    if "matrices" in spec:
        raw = spec["matrices"]
        _require(isinstance(raw, list), "must be one matrix per generator", f"{where}.matrices")
        matrices = []
        for s, matrix in enumerate(raw):
            here = f"{where}.matrices[{s}]"
            _require(
                isinstance(matrix, list) and all(isinstance(row, list) for row in matrix),
                "must be a list of rows", here,
            )
            matrices.append([
                [parse_rational(c, f"{here}[{r}][{col}]") for col, c in enumerate(row)]
                for r, row in enumerate(matrix)
            ])
    else:
        _require(
            len(variables) == group.degree,
            f"permutation action needs {group.degree} variables", f"{where}.variables",
        )
        matrices = permutation_matrices(group)

    return GroupActionSpec(group, list(variables), matrices, truncate)


def load_algebra(data: Any, source: str = "<memory>") -> AlgebraFile:
    """Structure checks on already-decoded JSON."""
    _require(isinstance(data, dict), "top level must be an object", source)

    name = data.get("name", Path(source).stem)
    _require(isinstance(name, str), "name must be a string", "name")

    basis = data.get("basis")
    _require(isinstance(basis, list) and all(isinstance(b, str) for b in basis), "basis must be a list of names", "basis")
    dim = data.get("dim", len(basis))
    _require(_is_int(dim) and dim == len(basis), f"dim {dim!r} does not match {len(basis)} basis names", "dim")

    brackets = _parse_brackets(data.get("brackets", []), dim, "brackets")
    algebra = LieAlgebra(name, tuple(basis), brackets)

    levi = _parse_levi(data, algebra)
    group = _parse_group_action(data["group_action"], name) if "group_action" in data else None

    return AlgebraFile(source, algebra, levi, group)


def parse_algebra(path) -> AlgebraFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", str(path)) from None

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}", str(path)) from None

    try:
        return load_algebra(data, str(path))
    except InputError as exc:
        raise InputError(str(exc), str(path)) from None


def parse_indices(text: str, where: str = "--levi") -> List[int]:
    """'1,2,3' -> [1, 2, 3]"""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated indices, got {text!r}", where) from None
