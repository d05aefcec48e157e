"""
Arrangement files: JSON with rational coefficients written as strings.

    {
      "ambient_dim": 3,
      "description": "two planes meeting in a line",
      "subspaces": [
        {"name": "x1", "equations": [["1", "0", "0"], ["0", "1", "0"]]},
        ...
      ]
    }
"""
import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from .arrangement import Arrangement, Subspace
from .errors import ArrangementParseError

logger = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")


def parse_rational(text: Union[str, int]) -> Fraction:
    """
    Parse a coefficient written as '-3', '7/2' or a JSON integer.

    Raises:
        ArrangementParseError: If the text does not follow the rational grammar
    """
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ArrangementParseError(f"Coefficient {text!r} must be a rational string such as '-3/4'")
    if isinstance(text, int):
        return Fraction(text)
    if not RATIONAL_PATTERN.fullmatch(text):
        raise ArrangementParseError(f"Coefficient '{text}' does not match -?[0-9]+(/[1-9][0-9]*)?")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Reduced 'p/q' string, or 'p' for integers."""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


JsonPath = Tuple[Union[str, int], ...]

_WHITESPACE = re.compile(r"[ \t\n\r]*")
_decoder = json.JSONDecoder()


def _require(condition: bool, message: str, path: JsonPath = ()) -> None:
    if not condition:
        raise ArrangementParseError(message, path=path)


def arrangement_from_data(data: Any) -> Arrangement:
    """
    Validate decoded JSON and build the raw (not yet normalized) arrangement.

    Grammar violations raise ArrangementParseError whose ``path`` names the
    offending value; :func:`loads_arrangement` turns that path into a line
    and column of the source text.
    """
    _require(isinstance(data, dict), "The top level must be a JSON object")
    unknown = set(data) - {"ambient_dim", "subspaces", "description"}
    _require(not unknown, f"Unknown keys: {sorted(unknown)}", (sorted(unknown)[0],) if unknown else ())
    ambient_dim = data.get("ambient_dim")
    _require(isinstance(ambient_dim, int) and not isinstance(ambient_dim, bool) and ambient_dim >= 1,
             f"ambient_dim must be a positive integer, got {ambient_dim!r}", ("ambient_dim",))
    description = data.get("description", "")
    _require(isinstance(description, str), "description must be a string", ("description",))
    subspaces = data.get("subspaces")
    _require(isinstance(subspaces, list) and len(subspaces) >= 1, "subspaces must be a non-empty list",
             ("subspaces",))

    atoms: List[Subspace] = []
    seen = set()
    for n, entry in enumerate(subspaces):
        where = f"subspaces[{n}]"
        _require(isinstance(entry, dict), f"{where} must be an object", ("subspaces", n))
        name = entry.get("name")
        _require(isinstance(name, str) and name.strip() != "", f"{where}.name must be a non-empty string",
                 ("subspaces", n, "name"))
        name = name.strip()
        _require(name not in seen, f"Duplicate subspace name '{name}'", ("subspaces", n, "name"))
        seen.add(name)
        equations = entry.get("equations")
        _require(isinstance(equations, list) and len(equations) >= 1,
                 f"{where}.equations must be a non-empty list of rows", ("subspaces", n, "equations"))
        rows = []
        for i, row in enumerate(equations):
            _require(isinstance(row, list) and len(row) == ambient_dim,
                     f"{where}.equations[{i}] must hold {ambient_dim} coefficients",
                     ("subspaces", n, "equations", i))
            values = []
            for j, value in enumerate(row):
                try:
                    values.append(parse_rational(value))
                except ArrangementParseError as e:
                    raise ArrangementParseError(f"{where}.equations[{i}]: {e}",
                                                path=("subspaces", n, "equations", i, j))
            rows.append(values)
        atoms.append(Subspace.from_equations(rows, ambient_dim, name))
    return Arrangement(ambient_dim, tuple(atoms), description)


def _skip(text: str, pos: int) -> int:
    return _WHITESPACE.match(text, pos).end()


def locate(text: str, path: JsonPath) -> int:
    """
    Character offset of the value at ``path`` in well-formed JSON text.

    A key or index that is missing resolves to the enclosing value.
    """
    pos = _skip(text, 0)
    for step in path:
        opening = text[pos]
        if opening not in "{[":
            return pos
        cursor = _skip(text, pos + 1)
        index = 0
        found = None
        while text[cursor] not in "}]":
            if opening == "{":
                key, cursor = _decoder.raw_decode(text, cursor)
                cursor = _skip(text, _skip(text, cursor) + 1)
                if key == step:
                    found = cursor
            elif index == step:
                found = cursor
            _, cursor = _decoder.raw_decode(text, cursor)
            cursor = _skip(text, cursor)
            if text[cursor] == ",":
                cursor = _skip(text, cursor + 1)
            index += 1
        if found is None:
            return pos
        pos = found
    return pos


def loads_arrangement(text: str) -> Arrangement:
    """
    Parse arrangement JSON text.

    Raises:
        ArrangementParseError: On JSON syntax errors or grammar violations,
            both with the line and column of the problem
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ArrangementParseError(f"Invalid JSON: {e.msg}", e.lineno, e.colno)
    try:
        return arrangement_from_data(data)
    except ArrangementParseError as e:
        offset = locate(text, e.path)
        line = text.count("\n", 0, offset) + 1
        column = offset - text.rfind("\n", 0, offset)
        raise ArrangementParseError(e.detail, line, column, e.path) from None


def load_arrangement(path: Union[str, Path]) -> Arrangement:
    """Read and parse an arrangement file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ArrangementParseError(f"Cannot read {path}: {e.strerror}")
    arrangement = loads_arrangement(text)
    logger.info(f"Loaded {len(arrangement)} subspaces in C^{arrangement.ambient_dim} from {path}")
    return arrangement


def arrangement_to_data(arr: Arrangement) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "ambient_dim": arr.ambient_dim,
        "subspaces": [
            {"name": atom.name, "equations": [[format_rational(v) for v in row] for row in atom.canonical]}
            for atom in arr.atoms
        ],
    }
    if arr.description:
        data["description"] = arr.description
    return data


def dump_arrangement(arr: Arrangement) -> str:
    """Canonical JSON text (reduced equations, sorted keys, trailing newline)."""
    return json.dumps(arrangement_to_data(arr), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
