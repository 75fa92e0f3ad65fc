"""Post-processing of discovered circuits: dedup, normal form, motifs, datasets."""

__author__ = "gadget-qec contributors"

from .dataset import (
    check_manifest,
    read_dataset,
    read_json,
    read_manifest,
    write_dataset,
    write_json,
)
from .motifs import motif_frequencies, motif_shape
from .preprocessing import (
    DedupReport,
    canonical_hash,
    dedup,
    normalization_map,
    normalize,
)

__all__ = [
    "canonical_hash",
    "dedup",
    "DedupReport",
    "normalize",
    "normalization_map",
    "motif_frequencies",
    "motif_shape",
    "write_dataset",
    "read_dataset",
    "read_manifest",
    "check_manifest",
    "write_json",
    "read_json",
]
