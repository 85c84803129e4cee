"""JSON file formats: algebra tables, morphisms, witness sets, representations
and complex matrices.  Rationals travel as Fraction strings ("3/2", "-1", "0")."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

import numpy as np

from .algebra import AlgebraTable, MorphismSpec
from .effects import EffectMatrix
from .errors import InputError
from .represent import DiagonalRep
from .states import StateWitnessSet

PathLike = Union[str, Path]


def frac_str(value: Fraction) -> str:
    return str(Fraction(value))


def parse_frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational literal {text!r}") from exc


def _read_json(path: PathLike) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def load_algebra(path: PathLike) -> AlgebraTable:
    """Read an algebra file: elements, zero, optional unit, sum triples."""
    data = _read_json(path)
    try:
        labels = list(data["elements"])
        zero_label = data["zero"]
        triples = data["sums"]
    except KeyError as exc:
        raise InputError(f"{path}: missing key {exc}") from exc
    if len(set(labels)) != len(labels):
        raise InputError(f"{path}: duplicate element labels")
    index = {lab: i for i, lab in enumerate(labels)}

    def resolve(label: object) -> int:
        if label not in index:
            raise InputError(f"{path}: unknown element label {label!r}")
        return index[label]

    sums: dict[tuple[int, int], int] = {}
    for entry in triples:
        if not (isinstance(entry, (list, tuple)) and len(entry) == 3):
            raise InputError(f"{path}: sum entries must be [x, y, z] triples")
        i, j, k = (resolve(lab) for lab in entry)
        if (i, j) in sums and sums[(i, j)] != k:
            raise InputError(
                f"{path}: conflicting entries for {entry[0]}+{entry[1]}")
        sums[(i, j)] = k
    unit = resolve(data["unit"]) if "unit" in data and data["unit"] is not None else None
    return AlgebraTable(tuple(labels), resolve(zero_label), sums, unit)


def algebra_to_json(table: AlgebraTable) -> dict:
    data = {
        "elements": list(table.elements),
        "zero": table.elements[table.zero],
        "sums": [[table.elements[i], table.elements[j], table.elements[k]]
                 for i, j, k in table.defined_sums()],
    }
    if table.unit is not None:
        data["unit"] = table.elements[table.unit]
    return data


def save_algebra(table: AlgebraTable, path: PathLike) -> None:
    Path(path).write_text(json.dumps(algebra_to_json(table), indent=2) + "\n",
                          encoding="utf-8")


def load_morphism(path: PathLike) -> MorphismSpec:
    """Read a morphism file; source/target paths resolve relative to it."""
    data = _read_json(path)
    base = Path(path).parent
    try:
        source = load_algebra(base / data["source"])
        target = load_algebra(base / data["target"])
        mapping = data["map"]
    except KeyError as exc:
        raise InputError(f"{path}: missing key {exc}") from exc
    if set(mapping) != set(source.elements):
        raise InputError(f"{path}: map must be total on the source elements")
    images = tuple(target.index(mapping[lab]) for lab in source.elements)
    return MorphismSpec(source, target, images)


def _pair_key(table: AlgebraTable, pair: tuple[int, int]) -> str:
    return f"{table.elements[pair[0]]},{table.elements[pair[1]]}"


def witness_set_to_json(table: AlgebraTable, witnesses: StateWitnessSet) -> dict:
    return {
        "goal": witnesses.goal,
        "states": [[frac_str(v) for v in s.values] for s in witnesses.states],
        "provenance": {_pair_key(table, pair): slot
                       for pair, slot in sorted(witnesses.provenance.items())},
        "failures": [[table.elements[a], table.elements[b]]
                     for a, b in witnesses.failures],
    }


def representation_to_json(rep: DiagonalRep, verification: dict) -> dict:
    return {
        "witnesses": rep.m,
        "order": list(rep.slot_labels),
        "operators": {label: [frac_str(v) for v in rep.operators[i]]
                      for i, label in enumerate(rep.elements)},
        "verification": verification,
    }


def load_matrix(path: PathLike) -> EffectMatrix:
    data = _read_json(path)
    try:
        dim = int(data["dim"])
        re = np.array(data["re"], dtype=float)
    except KeyError as exc:
        raise InputError(f"{path}: missing key {exc}") from exc
    im = np.array(data.get("im", np.zeros((dim, dim))), dtype=float)
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise InputError(f"{path}: re/im must be {dim}x{dim}")
    return EffectMatrix(re + 1j * im)


def save_matrix(matrix: EffectMatrix, path: PathLike) -> None:
    data = {
        "dim": matrix.dim,
        "re": matrix.mat.real.tolist(),
        "im": matrix.mat.imag.tolist(),
    }
    Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
