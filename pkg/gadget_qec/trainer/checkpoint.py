"""Versioned checkpoints: network (and optimizer) arrays plus a JSON header."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np
import orjson

from .maxppo import PolicyValueNets

CHECKPOINT_FORMAT = "gadget-qec-checkpoint"
CHECKPOINT_VERSION = 1
_META_KEY = "__meta__"


def save_checkpoint(
    path: Union[str, Path],
    nets: PolicyValueNets,
    config_hash: str,
    optimizers: Optional[Dict[str, Any]] = None,
    **meta,
) -> Path:
    """Write ``nets`` (and optimizer states) to a ``.npz`` file.

    Parameters
    ----------
    path: Union[str, Path]
        Target file; numpy appends ``.npz`` when missing.
    nets: PolicyValueNets
        The networks.
    config_hash: str
        Hash of the run configuration, checked again on load.
    optimizers: Dict[str, AbstractOptimizer], optional
        Optimizers to store, keyed by name.
    **meta
        Extra JSON-serialisable header entries.

    """
    path = Path(path)
    if path.suffix != ".npz":
        path = path.with_suffix(".npz")
    arrays = dict(nets.state_dict())
    for name, opt in (optimizers or {}).items():
        arrays.update({f"opt.{name}.{key}": v for key, v in opt.state_dict().items()})
    header = {
        "format": CHECKPOINT_FORMAT,
        "version": CHECKPOINT_VERSION,
        "config_hash": config_hash,
        "obs_size": nets.obs_size,
        "n_actions": nets.n_actions,
        **meta,
    }
    arrays[_META_KEY] = np.frombuffer(orjson.dumps(header), dtype=np.uint8)
    path.parent.mkdir(parents=True, exist_ok=True)
    np.savez(path, **arrays)
    return path


def load_checkpoint(
    path: Union[str, Path],
    nets: Optional[PolicyValueNets] = None,
    expected_hash: Optional[str] = None,
    optimizers: Optional[Dict[str, Any]] = None,
) -> Tuple[Dict[str, np.ndarray], Dict[str, Any]]:
    """Read a checkpoint, optionally loading it into ``nets`` and ``optimizers``.

    Raises
    ------
    ValueError
        On an unknown format or version, or a config hash mismatch.

    """
    with np.load(Path(path)) as data:
        arrays = {key: data[key] for key in data.files}
    if _META_KEY not in arrays:
        raise ValueError(f"{path} is not a gadget-qec checkpoint (no header)")
    header = orjson.loads(arrays.pop(_META_KEY).tobytes())
    if header.get("format") != CHECKPOINT_FORMAT:
        raise ValueError(f"{path}: unknown checkpoint format {header.get('format')!r}")
    if header.get("version") != CHECKPOINT_VERSION:
        raise ValueError(
            f"{path}: checkpoint version {header.get('version')} is not supported"
        )
    if expected_hash is not None and header["config_hash"] != expected_hash:
        raise ValueError(
            f"{path}: config hash {header['config_hash'][:12]} does not match "
            f"{expected_hash[:12]}"
        )
    if nets is not None:
        nets.load_state_dict(arrays)
    for name, opt in (optimizers or {}).items():
        prefix = f"opt.{name}."
        opt.load_state_dict(
            {k[len(prefix) :]: v for k, v in arrays.items() if k.startswith(prefix)}
        )
    return arrays, header
