"""Information measures on discrete symbol sequences.

Everything here is a pure function of its arguments.  The central object is a
:class:`SymbolSequence`: a finite string of symbols drawn from the alphabet
``{0 .. 2**b - 1}``, where ``b`` is the number of bits per symbol.  Binary
sequences (``b=1``) can be regrouped to coarser scales with :func:`rescale`,
and the four headline measures -- emergence, self-organization, complexity,
homeostasis -- are derived from plug-in Shannon information on the regrouped
string.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "SymbolSequence",
    "MeasureSet",
    "NORM_CONSTANT",
    "estimate_distribution",
    "shannon_information",
    "normalized_information",
    "rescale",
    "expand_to_bits",
    "emergence",
    "emergence_simplified",
    "self_organization",
    "self_organization_simplified",
    "complexity",
    "complexity_simplified",
    "hamming_distance",
    "homeostasis",
    "simplified_measures",
    "multiscale_profile",
    "uncorrelated_homeostasis",
]

# Normalizing constant for the simplified complexity parabola.  Fixed for
# normalized (binary-derived) information; kept as a keyword hook only.
NORM_CONSTANT = 4.0

# Symbols are packed into int64, so grouped scales cannot exceed 62 bits.
_MAX_SCALE = 62

_RANGE_TOL = 1e-9


@dataclass(frozen=True)
class SymbolSequence:
    """A finite sequence of symbols over the alphabet ``{0 .. 2**b - 1}``.

    Parameters
    ----------
    symbols : array-like of int
        The symbol values, in order.
    bits_per_symbol : int
        The scale ``b``; the alphabet size is ``2**b``.
    """

    symbols: np.ndarray
    bits_per_symbol: int = 1

    def __post_init__(self):
        symbols = np.asarray(self.symbols, dtype=np.int64)
        if symbols.ndim != 1:
            raise ValueError("symbols must be one-dimensional")
        b = int(self.bits_per_symbol)
        if b < 1:
            raise ValueError("bits_per_symbol must be >= 1")
        if b > _MAX_SCALE:
            raise ValueError(f"bits_per_symbol must be <= {_MAX_SCALE}")
        if symbols.size and (symbols.min() < 0 or int(symbols.max()) >= (1 << b)):
            raise ValueError(f"symbols must lie in [0, 2^{b})")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "bits_per_symbol", b)

    def __len__(self) -> int:
        return int(self.symbols.size)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymbolSequence)
            and self.bits_per_symbol == other.bits_per_symbol
            and np.array_equal(self.symbols, other.symbols)
        )

    @classmethod
    def from_bits(cls, bits: str | Iterable[int]) -> "SymbolSequence":
        """Build a binary (``b=1``) sequence.

        Accepts a string of ``'0'``/``'1'`` characters (whitespace ignored)
        or any iterable of 0/1 integers.
        """
        if isinstance(bits, str):
            cleaned = bits.split()
            joined = "".join(cleaned)
            if set(joined) - {"0", "1"}:
                raise ValueError("bit string may only contain '0', '1', and whitespace")
            values = np.frombuffer(joined.encode("ascii"), dtype=np.uint8) - ord("0")
        else:
            values = np.asarray(list(bits), dtype=np.int64)
        return cls(values.astype(np.int64), 1)

    def to_bitstring(self) -> str:
        """Canonical '0'/'1' text form; only defined for ``b=1`` sequences."""
        if self.bits_per_symbol != 1:
            raise ValueError("to_bitstring requires a binary sequence")
        return "".join("1" if s else "0" for s in self.symbols)


@dataclass(frozen=True)
class MeasureSet:
    """The measure tuple (E, S, C, H) at one scale.

    ``homeostasis`` is ``None`` when the producing pipeline has no paired
    states to compare (e.g. a profile of a single sequence).
    """

    emergence: float
    self_organization: float
    complexity: float
    homeostasis: float | None
    scale: int

    def __post_init__(self):
        if self.scale < 1:
            raise ValueError("scale must be >= 1")
        for name in ("emergence", "self_organization", "complexity", "homeostasis"):
            value = getattr(self, name)
            if value is None:
                continue
            if not (-_RANGE_TOL <= value <= 1.0 + _RANGE_TOL):
                raise ValueError(f"{name} out of range [0, 1]: {value!r}")


def _require_nonempty(seq: SymbolSequence) -> None:
    if len(seq) == 0:
        raise ValueError("empty sequence")


def estimate_distribution(seq: SymbolSequence) -> dict[int, float]:
    """Plug-in (empirical frequency) distribution of the symbols.

    Symbols absent from the sequence are omitted from the result.
    """
    _require_nonempty(seq)
    values, counts = np.unique(seq.symbols, return_counts=True)
    n = seq.symbols.size
    return {int(v): int(c) / n for v, c in zip(values, counts)}


def shannon_information(seq: SymbolSequence) -> float:
    """Shannon information of the plug-in distribution, in bits.

    ``I = -sum(P(x) * log2(P(x)))`` with the convention ``0*log(0) = 0``;
    the result lies in ``[0, bits_per_symbol]``.
    """
    _require_nonempty(seq)
    _, counts = np.unique(seq.symbols, return_counts=True)
    p = counts / seq.symbols.size
    # counts from `unique` are always positive, so log2 is safe here
    return float(-(p * np.log2(p)).sum()) + 0.0


def normalized_information(seq: SymbolSequence) -> float:
    """Shannon information divided by the scale ``b``, in ``[0, 1]``."""
    return shannon_information(seq) / seq.bits_per_symbol


def rescale(bits: SymbolSequence, target_b: int) -> SymbolSequence:
    """Group a binary sequence into ``target_b``-bit symbols, MSB first.

    Non-overlapping groups of ``target_b`` consecutive bits become one symbol
    each; a trailing remainder of fewer than ``target_b`` bits is discarded.
    """
    if bits.bits_per_symbol != 1:
        raise ValueError("rescale requires a binary (b=1) sequence")
    target_b = int(target_b)
    if target_b < 1:
        raise ValueError("target_b must be >= 1")
    if target_b > _MAX_SCALE:
        raise ValueError(f"target_b must be <= {_MAX_SCALE}")
    groups = len(bits) // target_b
    if groups == 0:
        raise ValueError("sequence too short for scale")
    weights = (np.int64(1) << np.arange(target_b - 1, -1, -1, dtype=np.int64))
    blocks = bits.symbols[: groups * target_b].reshape(groups, target_b)
    return SymbolSequence(blocks @ weights, target_b)


def expand_to_bits(seq: SymbolSequence) -> SymbolSequence:
    """Unpack each symbol into its ``bits_per_symbol`` bits, MSB first.

    Inverse of :func:`rescale` on the retained prefix.
    """
    _require_nonempty(seq)
    b = seq.bits_per_symbol
    shifts = np.arange(b - 1, -1, -1, dtype=np.int64)
    bits = (seq.symbols[:, None] >> shifts) & 1
    return SymbolSequence(bits.ravel(), 1)


def emergence(i_in: float, i_out: float) -> float:
    """General-form emergence: the ratio of produced to supplied information."""
    if i_in == 0:
        raise ValueError("undefined emergence: zero input information")
    return i_out / i_in


def emergence_simplified(seq: SymbolSequence) -> float:
    """Simplified emergence (random input assumed): the normalized information."""
    return normalized_information(seq)


def self_organization(i_in: float, i_out: float) -> float:
    """General-form self-organization: the information reduction ``i_in - i_out``.

    Negative values signal net information production.
    """
    return i_in - i_out


def self_organization_simplified(seq: SymbolSequence) -> float:
    """Simplified self-organization: one minus the normalized information."""
    return 1.0 - normalized_information(seq)


def complexity(e: float, s: float) -> float:
    """General-form complexity: the product of emergence and self-organization."""
    return e * s


def complexity_simplified(seq: SymbolSequence, *, norm_constant: float = NORM_CONSTANT) -> float:
    """Simplified complexity ``a * I * (1 - I)`` on normalized information.

    With the default ``a=4`` the result spans ``[0, 1]``, peaking at ``I=0.5``.
    """
    i_out = normalized_information(seq)
    return norm_constant * i_out * (1.0 - i_out)


def _check_comparable(a: SymbolSequence, b: SymbolSequence) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    if a.bits_per_symbol != b.bits_per_symbol:
        raise ValueError(
            f"scale mismatch: {a.bits_per_symbol} != {b.bits_per_symbol}"
        )
    if len(a) == 0:
        raise ValueError("empty sequence")


def hamming_distance(a: SymbolSequence, b: SymbolSequence) -> float:
    """Fraction of positions at which two equal-length sequences differ."""
    _check_comparable(a, b)
    return float(np.mean(a.symbols != b.symbols))


def homeostasis(a: SymbolSequence, b: SymbolSequence) -> float:
    """One minus the normalized Hamming distance: 1 means no change."""
    return 1.0 - hamming_distance(a, b)


def simplified_measures(seq: SymbolSequence) -> MeasureSet:
    """Simplified (E, S, C) of one sequence at its own scale; H is None."""
    e = min(max(normalized_information(seq), 0.0), 1.0)
    return MeasureSet(
        emergence=e,
        self_organization=1.0 - e,
        complexity=NORM_CONSTANT * e * (1.0 - e),
        homeostasis=None,
        scale=seq.bits_per_symbol,
    )


def multiscale_profile(bits: SymbolSequence, scales: Sequence[int]) -> dict[int, MeasureSet]:
    """Simplified E, S, C of a binary sequence regrouped at each scale.

    Raises for any scale larger than the sequence; H requires paired states
    and is left to the simulator pipelines.
    """
    profile: dict[int, MeasureSet] = {}
    for b in scales:
        try:
            seq_b = rescale(bits, b)
        except ValueError as exc:
            raise ValueError(f"scale {b}: {exc}") from exc
        profile[int(b)] = simplified_measures(seq_b)
    return profile


def uncorrelated_homeostasis(scale: int, form: str = "exact") -> float:
    """Reference H between uncorrelated uniform random states at a scale.

    ``form="exact"`` gives ``2**-scale``, the probability that two independent
    uniform symbols match.  ``form="inv2b"`` gives the alternative ``1/(2*scale)``
    convention sometimes used for this reference line; the two coincide at
    scales 1 and 2.
    """
    if scale < 1:
        raise ValueError("scale must be >= 1")
    if form == "exact":
        return 2.0 ** -scale
    if form == "inv2b":
        return 1.0 / (2.0 * scale)
    raise ValueError(f"unknown baseline form: {form!r}")
