"""CSS error enumeration, Knill-Laflamme detection, distance checks and bounds.

The detection hot path works on packed words: for a pure-X error only the parity of
its overlap with each row's Z bits matters (and vice versa), so the anticommutation
test of ``N`` errors against ``R`` rows is a batched ``AND`` + XOR-fold. Errors that
commute with every row are then tested for membership of the row space through the
tableau's cached elimination basis.
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from .gf2 import n_words, pack_bits, parity, unpack_bits
from .symplectic import PauliString
from .tableau import StabilizerTableau

X_TYPE, Z_TYPE = 0, 1
_TYPE_LABEL = {X_TYPE: "X", Z_TYPE: "Z"}
DEFAULT_P = 0.1
# errors tested against the rows per batch; bounds the (chunk, rows, words) buffer
_CHUNK = 8192


def n_errors_per_type(n: int, d: int, include_identity: bool = False) -> int:
    """Count of pure X-type (equivalently Z-type) errors of weight < d."""
    start = 0 if include_identity else 1
    return sum(math.comb(n, w) for w in range(start, d))


@dataclass(frozen=True)
class ErrorSet:
    """All pure-X and pure-Z Pauli errors of weight ``1 .. d-1`` on ``n`` qubits.

    Errors are stored as packed supports together with their type, so the set never
    materialises ``PauliString`` objects unless asked to (see :attr:`errors`).
    X-type errors come first, each type ordered by weight and then lexicographically.
    """

    n: int
    d: int
    p: float
    support: np.ndarray  # (N, n_words(n)) uint64
    kind: np.ndarray  # (N,) uint8, X_TYPE or Z_TYPE
    weights: np.ndarray  # (N,) int64
    lambdas: np.ndarray  # (N,) float64

    def __len__(self) -> int:
        return len(self.kind)

    @property
    def errors(self) -> List[PauliString]:
        return [self.error(i) for i in range(len(self))]

    def error(self, idx: int) -> PauliString:
        zero = np.zeros(n_words(self.n), dtype=np.uint64)
        s = self.support[idx]
        return PauliString(self.n, s, zero) if self.kind[idx] == X_TYPE else (
            PauliString(self.n, zero, s)
        )

    def counts(self) -> pd.DataFrame:
        """Per weight and type counts, with the identity term of the count formula."""
        rows = [
            {"weight": 0, "pauli_type": t, "n_errors": 1, "included": False}
            for t in ("X", "Z")
        ]
        for w in range(1, self.d):
            for t in ("X", "Z"):
                rows.append(
                    {
                        "weight": w,
                        "pauli_type": t,
                        "n_errors": math.comb(self.n, w),
                        "included": True,
                    }
                )
        return pd.DataFrame(rows)


def _support_matrix(n: int, w: int) -> np.ndarray:
    combos = np.array(list(itertools.combinations(range(n), w)), dtype=np.int64)
    bits = np.zeros((len(combos), n), dtype=np.uint8)
    bits[np.arange(len(combos))[:, None], combos] = 1
    return bits


def enumerate_errors(n: int, d: int, p: float = DEFAULT_P) -> ErrorSet:
    """Enumerate the CSS error set of target distance ``d``.

    Parameters
    ----------
    n: int
        Number of physical qubits.
    d: int
        Target distance; errors of weight ``1 .. d-1`` are produced.
    p: float, optional
        Physical error rate; the weight of error ``E`` is ``lambda = p ** weight(E)``.
        By default 0.1.

    Returns
    -------
    ErrorSet
        X-type errors followed by Z-type errors; the identity is excluded.

    """
    if not 1 <= d <= n:
        raise ValueError(f"distance must satisfy 1 <= d <= n, got d={d}, n={n}")
    if not p > 0:
        raise ValueError(f"error rate p must be positive, got {p}")
    blocks = [_support_matrix(n, w) for w in range(1, d)]
    bits = np.concatenate(blocks) if blocks else np.zeros((0, n), dtype=np.uint8)
    packed = pack_bits(bits).reshape(len(bits), n_words(n))
    weights = bits.sum(axis=1, dtype=np.int64)
    n_type = len(bits)
    support = np.concatenate([packed, packed])
    kind = np.repeat(np.array([X_TYPE, Z_TYPE], dtype=np.uint8), n_type)
    weights = np.concatenate([weights, weights])
    lambdas = np.power(float(p), weights.astype(np.float64))
    for arr in (support, kind, weights, lambdas):
        arr.flags.writeable = False
    return ErrorSet(n, d, float(p), support, kind, weights, lambdas)


def _detected_mask(t: StabilizerTableau, support: np.ndarray, kind: np.ndarray):
    """Boolean detectability of every (support, kind) error against ``t``."""
    detected = np.zeros(len(kind), dtype=bool)
    if not len(kind):
        return detected
    if t.n_rows:
        for err_type, row_bits in ((X_TYPE, t.z), (Z_TYPE, t.x)):
            idx = np.flatnonzero(kind == err_type)
            for start in range(0, len(idx), _CHUNK):
                chunk = idx[start : start + _CHUNK]
                overlap = support[chunk][:, None, :] & row_bits[None, :, :]
                detected[chunk] = parity(overlap).any(axis=1)
    # degenerate errors: commuting with every row but acting trivially on the code
    pending = np.flatnonzero(~detected)
    if len(pending) and t.n_rows:
        basis = t.row_basis()
        bits = np.zeros((len(pending), 2 * t.n), dtype=np.uint8)
        supp_bits = unpack_bits(support[pending], t.n).reshape(len(pending), t.n)
        is_x = kind[pending] == X_TYPE
        bits[is_x, : t.n] = supp_bits[is_x]
        bits[~is_x, t.n :] = supp_bits[~is_x]
        in_span = basis.contains(pack_bits(bits).reshape(len(pending), -1))
        detected[pending[in_span]] = True
    return detected


def is_detectable(t: StabilizerTableau, e: PauliString) -> bool:
    """True iff ``e`` anticommutes with some row or lies in the row space.

    ``e`` must be pure X-type or pure Z-type.
    """
    if e.n != t.n:
        raise ValueError(f"error acts on {e.n} qubits, tableau on {t.n}")
    if e.is_x_type:
        support, kind = e.x, X_TYPE
    elif e.is_z_type:
        support, kind = e.z, Z_TYPE
    else:
        raise ValueError(f"{e} is neither pure X-type nor pure Z-type")
    mask = _detected_mask(t, support[None, :], np.array([kind], dtype=np.uint8))
    return bool(mask[0])


@dataclass
class KLReport:
    """Result of :func:`kl_sum`."""

    sigma_kl: float
    undetected: np.ndarray
    breakdown: pd.DataFrame
    error_set: Optional[ErrorSet] = field(default=None, repr=False)

    @property
    def n_undetected(self) -> int:
        return len(self.undetected)

    def witnesses(self, limit: int = 10) -> List[str]:
        """Labels of (up to ``limit``) undetected errors."""
        if self.error_set is None:
            return []
        return [str(self.error_set.error(i)) for i in self.undetected[:limit]]


def kl_sum(t: StabilizerTableau, es: ErrorSet) -> KLReport:
    """Knill-Laflamme sum ``sum_mu lambda_mu K_mu``, ``K_mu = 1`` when undetected."""
    if es.n != t.n:
        raise ValueError(f"error set acts on {es.n} qubits, tableau on {t.n}")
    detected = _detected_mask(t, es.support, es.kind)
    undetected = np.flatnonzero(~detected)
    # fixed summation order over ascending indices
    sigma = float(np.sum(es.lambdas[undetected])) if len(undetected) else 0.0

    rows = []
    for w in range(1, es.d):
        for err_type, label in _TYPE_LABEL.items():
            sel = (es.weights == w) & (es.kind == err_type)
            miss = sel & ~detected
            rows.append(
                {
                    "weight": w,
                    "pauli_type": label,
                    "n_errors": int(sel.sum()),
                    "n_undetected": int(miss.sum()),
                    "sigma_kl": float(np.sum(es.lambdas[miss])),
                }
            )
    breakdown = pd.DataFrame(
        rows, columns=["weight", "pauli_type", "n_errors", "n_undetected", "sigma_kl"]
    )
    return KLReport(sigma, undetected, breakdown, es)


def kl_value(t: StabilizerTableau, es: ErrorSet) -> float:
    """Only the scalar of :func:`kl_sum`, without building the report."""
    detected = _detected_mask(t, es.support, es.kind)
    undetected = np.flatnonzero(~detected)
    return float(np.sum(es.lambdas[undetected])) if len(undetected) else 0.0


@dataclass(frozen=True)
class DistanceCheck:
    """Outcome of :func:`verify_distance_at_least`.

    ``status`` is ``"pass"``, ``"fail"`` or ``"infeasible"`` (the number of errors to
    test exceeded the budget); only ``"pass"`` is truthy.
    """

    status: str
    d: int
    n_checked: int
    witnesses: tuple = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.passed


def verify_distance_at_least(
    t: StabilizerTableau, d: int, budget: int = 2_000_000, p: float = DEFAULT_P
) -> DistanceCheck:
    """Check that every pure X / Z error of weight ``<= d - 1`` is detectable.

    Parameters
    ----------
    t: StabilizerTableau
        A CSS tableau.
    d: int
        The distance to certify.
    budget: int, optional
        Maximum number of errors to enumerate; above it the result is
        ``"infeasible"``. By default 2 000 000.
    p: float, optional
        Error rate used for the weights of the underlying error set.

    """
    if not t.is_css():
        raise ValueError("distance verification requires a CSS tableau")
    if d > t.n:
        return DistanceCheck("fail", d, 0)
    n_total = 2 * n_errors_per_type(t.n, d)
    if n_total > budget:
        return DistanceCheck("infeasible", d, 0)
    report = kl_sum(t, enumerate_errors(t.n, d, p))
    status = "pass" if report.n_undetected == 0 else "fail"
    return DistanceCheck(status, d, n_total, tuple(report.witnesses(10)))


@dataclass(frozen=True)
class QHBResult:
    n: int
    k: int
    d: int
    variant: str
    t: int
    bound_lhs: int
    bound_rhs: int
    satisfied: bool
    perfect: bool
    even_d: bool

    def status(self) -> str:
        if self.perfect:
            return "perfect"
        return "satisfied" if self.satisfied else "violated"


QHB_VARIANTS = ("stabilizer", "self-dual-css")


def qhb(n: int, k: int, d: int, variant: str = "stabilizer") -> QHBResult:
    """Quantum Hamming bound at ``t = floor((d - 1) / 2)``.

    ``stabilizer``: ``2^(n-k) >= sum_j 3^j C(n, j)``;
    ``self-dual-css``: ``2^floor((n-k)/2) >= sum_j C(n, j)``.
    Even ``d`` is evaluated at the floored ``t`` and flagged through ``even_d``.
    """
    if variant not in QHB_VARIANTS:
        raise ValueError(f"variant must be one of {QHB_VARIANTS}, got {variant!r}")
    if n < 1 or not 0 <= k <= n or d < 1:
        raise ValueError(f"invalid code parameters [[{n},{k},{d}]]")
    t = (d - 1) // 2
    if variant == "stabilizer":
        lhs = 2 ** (n - k)
        rhs = sum(3**j * math.comb(n, j) for j in range(t + 1))
    else:
        lhs = 2 ** ((n - k) // 2)
        rhs = sum(math.comb(n, j) for j in range(t + 1))
    return QHBResult(n, k, d, variant, t, lhs, rhs, lhs >= rhs, lhs == rhs, d % 2 == 0)


def qhb_curve(
    n_values: Sequence[int], d: int, variant: str = "self-dual-css"
) -> pd.DataFrame:
    """Largest ``k`` allowed by the bound for every ``n`` (-1 when none is)."""
    rows = []
    for n in n_values:
        allowed = [k for k in range(0, n + 1) if qhb(n, k, d, variant).satisfied]
        k_max = max(allowed, default=-1)
        rows.append({"n": n, "d": d, "variant": variant, "k_max": k_max})
    return pd.DataFrame(rows)


@dataclass(frozen=True)
class WeightStats:
    min: float
    max: float
    mean: float
    std: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "w_min": self.min,
            "w_max": self.max,
            "w_mean": self.mean,
            "w_std": self.std,
        }


def _stats(weights: np.ndarray) -> WeightStats:
    if not len(weights):
        return WeightStats(np.nan, np.nan, np.nan, np.nan)
    weights = np.asarray(weights, dtype=np.float64)
    return WeightStats(
        float(weights.min()),
        float(weights.max()),
        float(weights.mean()),
        float(weights.std()),
    )


def weight_stats(t: StabilizerTableau, pauli_type: Optional[str] = None) -> WeightStats:
    """Min / max / mean / (population) std of the row weights.

    Parameters
    ----------
    t: StabilizerTableau
        The tableau.
    pauli_type: str, optional
        Restrict to ``"X"``-type or ``"Z"``-type rows; all rows when None.

    """
    weights = t.row_weights()
    if pauli_type is not None:
        has_x, has_z = t.x.any(axis=1), t.z.any(axis=1)
        keep = (has_x & ~has_z) if pauli_type.upper() == "X" else (has_z & ~has_x)
        weights = weights[keep]
    return _stats(weights)


def dataset_weight_stats(
    tableaux: Sequence[StabilizerTableau], labels=None
) -> pd.DataFrame:
    """One row of weight statistics per tableau (box-plot input)."""
    labels = labels if labels is not None else range(len(tableaux))
    rows = []
    for label, t in zip(labels, tableaux):
        rows.append({"label": label, "n": t.n, "k": t.k, **weight_stats(t).to_dict()})
    columns = ["label", "n", "k", "w_min", "w_max", "w_mean", "w_std"]
    return pd.DataFrame(rows, columns=columns)
