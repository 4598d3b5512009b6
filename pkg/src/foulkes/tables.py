"""Bit-exact serialization: table exports and fundamental-domain streaming.

Rationals serialize as exact ``p/q`` strings (plain ``p`` when integral), never
as decimals.  Partitions serialize as comma-joined part lists in canonical
reverse-lexicographic order.  Identical invocations produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from fractions import Fraction
from typing import Iterator

from .basis import (
    BASIS_TAGS,
    basis_vector,
    change_of_basis,
    elementary_divisor,
    coords_to_vector,
    phi_coords_multiplicities,
)
from .characters import character_table
from .combinatorics import Partition
from .lattice import theta_from_params
from .products import intersection_inner_product, structure_constants

TABLE_NAMES = BASIS_TAGS + ("irr", "c-tensor", "matrix", "gram")


def fraction_str(value: Fraction | int) -> str:
    return str(Fraction(value))


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def partition_key(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _csv_rows(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _basis_table(tag: str, n: int, fmt: str) -> str:
    rows = [[fraction_str(v) for v in basis_vector(n, tag, i).values] for i in range(n)]
    if fmt == "json":
        return dumps({"table": tag, "n": n, "columns": [f"L{j}" for j in range(1, n + 1)], "rows": rows}) + "\n"
    return _csv_rows([["i"] + [f"L{j}" for j in range(1, n + 1)]] + [[str(i)] + r for i, r in enumerate(rows)])


def _irr_table(n: int, fmt: str) -> str:
    table = character_table(n)
    labels = [partition_key(p) for p in table.parts]
    if fmt == "json":
        return dumps(
            {
                "table": "irr",
                "n": n,
                "partitions": [list(p) for p in table.parts],
                "rows": [list(r) for r in table.rows],
            }
        ) + "\n"
    header = ["lambda/mu"] + labels
    body = [[labels[i]] + [str(v) for v in row] for i, row in enumerate(table.rows)]
    return _csv_rows([header] + body)


def _c_tensor_table(n: int, fmt: str) -> str:
    constants = structure_constants(n, method="formula")
    if fmt == "json":
        return dumps(
            {"table": "c-tensor", "n": n, "c": [[list(v) for v in row] for row in constants.tensor]}
        ) + "\n"
    header = ["i", "j"] + [f"k{k}" for k in range(n)]
    body = [
        [str(i), str(j)] + [str(v) for v in constants.vector(i, j)]
        for i in range(n)
        for j in range(n)
    ]
    return _csv_rows([header] + body)


def _matrix_table(n: int, src: str, dst: str, fmt: str) -> str:
    matrix = change_of_basis(n, src, dst)
    rows = [[fraction_str(v) for v in row] for row in matrix]
    if fmt == "json":
        return dumps({"table": "matrix", "n": n, "src": src, "dst": dst, "rows": rows}) + "\n"
    header = [f"{src}->{dst}"] + [str(j) for j in range(n)]
    return _csv_rows([header] + [[str(i)] + row for i, row in enumerate(rows)])


def _gram_table(n: int, src: str, fmt: str) -> str:
    vectors = [basis_vector(n, src, i) for i in range(n)]
    rows = [
        [fraction_str(intersection_inner_product(a, b)) for b in vectors] for a in vectors
    ]
    if fmt == "json":
        return dumps({"table": "gram", "n": n, "basis": src, "rows": rows}) + "\n"
    header = [f"gram-{src}"] + [str(j) for j in range(n)]
    return _csv_rows([header] + [[str(i)] + row for i, row in enumerate(rows)])


def export_table(table: str, n: int, fmt: str, src: str = "phi", dst: str = "gamma") -> str:
    """Render one of the named tables for S_n as a deterministic string.

    ``src``/``dst`` select the bases for the ``matrix`` table; ``src`` alone
    selects the family for the ``gram`` table.
    """
    if table not in TABLE_NAMES:
        raise ValueError(f"unknown table {table!r}; choose from {', '.join(TABLE_NAMES)}")
    if fmt not in ("json", "csv"):
        raise ValueError(f"unknown format {fmt!r}; choose json or csv")
    if n < 1:
        raise ValueError("n must be positive")
    if table in ("matrix", "gram") and not (src in BASIS_TAGS and dst in BASIS_TAGS):
        raise ValueError(f"src/dst must be basis tags, got {src!r}, {dst!r}")
    if table in BASIS_TAGS:
        return _basis_table(table, n, fmt)
    if table == "irr":
        return _irr_table(n, fmt)
    if table == "matrix":
        return _matrix_table(n, src, dst, fmt)
    if table == "gram":
        return _gram_table(n, src, fmt)
    return _c_tensor_table(n, fmt)


def domain_record(n: int, a: tuple[int, ...]) -> dict:
    """JSON-able description of one parametrized fundamental-domain character."""
    coords = theta_from_params(n, a)
    vector = coords_to_vector(coords)
    pairs = phi_coords_multiplicities(coords)
    if any(m.denominator != 1 or m < 0 for _, m in pairs):
        raise AssertionError(f"domain member failed certification: a={a}")
    multiplicities = {partition_key(lam): int(m) for lam, m in pairs}
    return {
        "a": list(a),
        "phi_coords": [fraction_str(c) for c in coords.coords],
        "length_values": [fraction_str(v) for v in vector.values],
        "multiplicities": multiplicities,
    }


def stream_domain(n: int) -> Iterator[str]:
    """NDJSON lines for the fundamental domain, one per member, count line last."""
    if n < 1:
        raise ValueError("n must be positive")
    box = [range(elementary_divisor(n, k + 1)) for k in range(n)]
    count = 0
    for a in itertools.product(*box):
        yield dumps(domain_record(n, a)) + "\n"
        count += 1
    yield dumps({"count": count}) + "\n"
