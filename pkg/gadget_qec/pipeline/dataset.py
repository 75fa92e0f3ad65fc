"""On-disk circuit datasets: one ``.circuit`` file per code plus a TSV manifest."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import orjson
import pandas as pd

from ..environment.circuit import Circuit
from ..stabilizer.code_analysis import weight_stats
from .preprocessing import canonical_hash

MANIFEST = "manifest.tsv"
MANIFEST_COLUMNS = [
    "circuit_id",
    "file",
    "n",
    "k",
    "d",
    "canonical_hash",
    "w_min",
    "w_max",
    "w_mean",
    "w_std",
    "n_cx",
]


def default_ids(circuits: Sequence[Circuit]) -> List[str]:
    return [f"n{c.n}k{c.k}d{c.d}_{i:04d}" for i, c in enumerate(circuits)]


def manifest_row(circuit_id: str, file: str, circuit: Circuit) -> Dict[str, Any]:
    t = circuit.final_tableau()
    return {
        "circuit_id": circuit_id,
        "file": file,
        "n": circuit.n,
        "k": circuit.k,
        "d": circuit.d,
        "canonical_hash": canonical_hash(t),
        **weight_stats(t).to_dict(),
        "n_cx": circuit.cx_count()["total"],
    }


def write_dataset(
    directory: Union[str, Path],
    circuits: Sequence[Circuit],
    circuit_ids: Optional[Sequence[str]] = None,
) -> pd.DataFrame:
    """Write ``circuits`` and their manifest into ``directory``.

    Returns
    -------
    pd.DataFrame
        The manifest, as written.

    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    if circuit_ids is None:
        circuit_ids = default_ids(circuits)
    circuit_ids = list(circuit_ids)
    if len(circuit_ids) != len(circuits):
        raise ValueError("circuit_ids and circuits differ in length")
    if len(set(circuit_ids)) != len(circuit_ids):
        raise ValueError("circuit ids must be unique")

    rows = []
    for cid, circuit in zip(circuit_ids, circuits):
        file = f"{cid}.circuit"
        circuit.write(directory / file)
        rows.append(manifest_row(cid, file, circuit))
    manifest = pd.DataFrame.from_records(rows, columns=MANIFEST_COLUMNS)
    manifest.to_csv(directory / MANIFEST, sep="\t", index=False)
    return manifest


def read_manifest(directory: Union[str, Path]) -> pd.DataFrame:
    path = Path(directory) / MANIFEST
    if not path.exists():
        raise FileNotFoundError(f"no {MANIFEST} in {directory}")
    manifest = pd.read_csv(
        path, sep="\t", dtype={"circuit_id": str, "file": str, "canonical_hash": str}
    )
    missing = set(MANIFEST_COLUMNS) - set(manifest.columns)
    if missing:
        raise ValueError(f"{path} lacks columns {sorted(missing)}")
    return manifest


def read_dataset(directory: Union[str, Path]) -> Tuple[List[Circuit], pd.DataFrame]:
    """Read every circuit listed in the manifest of ``directory``.

    Raises
    ------
    CircuitParseError
        When a listed file is malformed.

    """
    directory = Path(directory)
    manifest = read_manifest(directory)
    circuits = [Circuit.read(directory / file) for file in manifest["file"]]
    return circuits, manifest


def check_manifest(directory: Union[str, Path]) -> pd.DataFrame:
    """Manifest rows whose recorded hash no longer matches the circuit file.

    The returned frame has the columns ``circuit_id``, ``recorded`` and ``actual``;
    it is empty for a consistent dataset.
    """
    circuits, manifest = read_dataset(directory)
    rows = []
    for (_, row), circuit in zip(manifest.iterrows(), circuits):
        actual = canonical_hash(circuit.final_tableau())
        if actual != row["canonical_hash"]:
            rows.append(
                {
                    "circuit_id": row["circuit_id"],
                    "recorded": row["canonical_hash"],
                    "actual": actual,
                }
            )
    return pd.DataFrame(rows, columns=["circuit_id", "recorded", "actual"])


def write_json(path: Union[str, Path], obj: Any) -> Path:
    """Serialize ``obj`` (numpy scalars and arrays included) with orjson."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(
        orjson.dumps(obj, option=orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY)
    )
    return path


def read_json(path: Union[str, Path]) -> Any:
    return orjson.loads(Path(path).read_bytes())
