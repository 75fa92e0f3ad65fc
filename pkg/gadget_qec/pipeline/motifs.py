"""Frequent CX subsequences ("motifs") across a set of circuits."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from ..environment.circuit import Circuit

MOTIF_COLUMNS = ["shape", "length", "count", "example_circuit_id"]


def motif_shape(gates: Sequence[Tuple[int, int]]) -> str:
    """Key of a CX window with its labels shifted so the smallest one is 0.

    >>> motif_shape([(3, 4), (4, 3)])
    '0>1 1>0'

    """
    offset = min(min(gate) for gate in gates)
    return " ".join(f"{c - offset}>{t - offset}" for c, t in gates)


def motif_frequencies(
    circuits: Sequence[Circuit],
    window: int = 8,
    min_length: int = 2,
    include_init: bool = False,
    circuit_ids: Optional[Sequence[str]] = None,
) -> pd.DataFrame:
    """Count every contiguous CX window of ``min_length`` to ``window`` gates.

    Parameters
    ----------
    circuits: Sequence[Circuit]
        The circuits to mine.
    window: int, optional
        Longest window, by default 8.
    min_length: int, optional
        Shortest window, by default 2.
    include_init: bool, optional
        Whether the Bell-pair CX gates of the init layer are prepended to each
        circuit's gate list, by default False.
    circuit_ids: Sequence[str], optional
        Ids reported as ``example_circuit_id``; positions when None.

    Returns
    -------
    pd.DataFrame
        One row per shape, sorted by count (descending), then by length (descending).

    """
    if not 1 <= min_length <= window:
        raise ValueError(f"need 1 <= min_length <= window, got {min_length}, {window}")
    if circuit_ids is None:
        circuit_ids = [str(i) for i in range(len(circuits))]
    if len(circuit_ids) != len(circuits):
        raise ValueError("circuit_ids and circuits differ in length")

    counts: Counter = Counter()
    example: Dict[str, str] = {}
    for cid, circuit in zip(circuit_ids, circuits):
        gates: List[Tuple[int, int]] = list(circuit.cx)
        if include_init:
            gates = list(circuit.init.cx_gates()) + gates
        for start in range(len(gates)):
            for length in range(min_length, window + 1):
                if start + length > len(gates):
                    break
                shape = motif_shape(gates[start : start + length])
                counts[shape] += 1
                example.setdefault(shape, cid)

    rows = [
        {
            "shape": shape,
            "length": shape.count(">"),
            "count": count,
            "example_circuit_id": example[shape],
        }
        for shape, count in counts.items()
    ]
    df = pd.DataFrame.from_records(rows, columns=MOTIF_COLUMNS)
    return df.sort_values(
        ["count", "length", "shape"], ascending=[False, False, True]
    ).reset_index(drop=True)
