"""JSON algebra files with exact rational entries.

A file looks like::

    {"dim": 3, "basis": ["x", "h", "y"],
     "mults":   {"bracket": [[1, 0, 0, "2"], ...]},      # [i, j, k, c]: e_i∘e_j ∋ c e_k
     "forms":   {"B": [[0, 2, "1"], ...]},               # [i, j, c]: B(e_i, e_j) = c
     "maps":    {"P": [[0, 2, "1"], ...]},               # [i, j, c]: P(e_j) ∋ c e_i
     "comults": {"delta": [[k, i, j, "1/2"], ...]}}      # δ(e_k) ∋ c e_i⊗e_j

Coefficients are strings ``"p"`` or ``"p/q"`` (plain integers are also
accepted); missing entries are zero and are omitted when writing.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .core import Algebra
from .errors import DuplicateEntry, IndexOutOfRange, ParseError

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")
SECTIONS = {"mults": 3, "forms": 2, "maps": 2, "comults": 3}


@dataclass(eq=False)
class AlgebraFile:
    dim: int
    basis: tuple = None
    mults: dict = field(default_factory=dict)
    forms: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    comults: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, AlgebraFile) or (self.dim, self.basis) != (other.dim, other.basis):
            return False
        for name in SECTIONS:
            mine, theirs = getattr(self, name), getattr(other, name)
            if mine.keys() != theirs.keys():
                return False
            if not all(la.equal(mine[k], theirs[k]) for k in mine):
                return False
        return True

    def labels(self):
        return self.basis if self.basis else tuple(f"e{i + 1}" for i in range(self.dim))

    def algebra(self):
        return Algebra(dict(self.mults), self.basis)


def parse_rational(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(where, f"coefficient {value!r} must be a string 'p/q' or an integer")
    if isinstance(value, int):
        return Fraction(value)
    if not _RATIONAL.match(value):
        raise ParseError(where, f"coefficient {value!r} is not of the form 'p' or 'p/q'")
    try:
        return Fraction(value.replace(" ", ""))
    except ZeroDivisionError:
        raise ParseError(where, f"coefficient {value!r} has zero denominator") from None


def format_rational(x):
    return str(la.Q(x))


def _densify(entries, rank, dim, where):
    if not isinstance(entries, list):
        raise ParseError(where, "expected a list of entries")
    out = la.zeros(*(dim,) * rank)
    seen = set()
    for pos, entry in enumerate(entries):
        at = f"{where}[{pos}]"
        if not isinstance(entry, list) or len(entry) != rank + 1:
            raise ParseError(at, f"expected {rank} indices and a coefficient")
        idx = entry[:rank]
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in idx):
            raise ParseError(at, "indices must be integers")
        if any(i < 0 or i >= dim for i in idx):
            raise IndexOutOfRange(at, f"index {idx} outside 0..{dim - 1}")
        idx = tuple(idx)
        if idx in seen:
            raise DuplicateEntry(at, f"index {list(idx)} given twice")
        seen.add(idx)
        out[idx] = parse_rational(entry[rank], at)
    return out


def from_dict(data):
    if not isinstance(data, dict):
        raise ParseError("$", "top level must be an object")
    unknown = set(data) - {"dim", "basis", *SECTIONS}
    if unknown:
        raise ParseError("$", f"unknown fields {sorted(unknown)}")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError("dim", "must be a nonnegative integer")
    basis = data.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) and b for b in basis):
            raise ParseError("basis", f"must list {dim} nonempty names")
        if len(set(basis)) != dim:
            raise ParseError("basis", "names must be distinct")
        basis = tuple(basis)
    sections = {}
    for name, rank in SECTIONS.items():
        block = data.get(name, {})
        if not isinstance(block, dict):
            raise ParseError(name, "must be an object mapping names to entry lists")
        sections[name] = {key: _densify(entries, rank, dim, f"{name}.{key}") for key, entries in block.items()}
    if not sections["mults"]:
        raise ParseError("mults", "at least one multiplication is required")
    return AlgebraFile(dim, basis, **sections)


def parse(text):
    """``AlgebraFile`` from JSON text; errors carry the offending line or field."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}", e.msg) from None
    return from_dict(data)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _sparse(array):
    out = []
    for idx in zip(*(array != 0).nonzero()):
        out.append([int(i) for i in idx] + [format_rational(array[idx])])
    return out


def to_dict(af):
    data = {"dim": af.dim}
    if af.basis:
        data["basis"] = list(af.basis)
    for name in SECTIONS:
        block = getattr(af, name)
        if block or name == "mults":
            data[name] = {key: _sparse(block[key]) for key in sorted(block)}
    return data


def serialize(af):
    """Stable JSON text: sections and entries in sorted order, one entry per line."""
    data = to_dict(af)
    lines = ["{", f'  "dim": {data["dim"]},']
    if "basis" in data:
        lines.append(f'  "basis": {json.dumps(data["basis"])},')
    blocks = [k for k in SECTIONS if k in data]
    for bi, name in enumerate(blocks):
        lines.append(f'  "{name}": {{')
        keys = list(data[name])
        for ki, key in enumerate(keys):
            entries = data[name][key]
            if not entries:
                lines.append(f"    {json.dumps(key)}: []" + ("," if ki < len(keys) - 1 else ""))
                continue
            lines.append(f"    {json.dumps(key)}: [")
            for ei, e in enumerate(entries):
                lines.append("      " + json.dumps(e) + ("," if ei < len(entries) - 1 else ""))
            lines.append("    ]" + ("," if ki < len(keys) - 1 else ""))
        lines.append("  }" + ("," if bi < len(blocks) - 1 else ""))
    lines.append("}")
    return "\n".join(lines) + "\n"


def save(af, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(af))
