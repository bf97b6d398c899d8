"""Dimension sequences of minimal projective resolutions.

A resolution is modelled only by the dimensions ``dim P^t`` of its terms.
Tensoring two resolutions convolves their dimension sequences, and
complexity is the polynomial growth rate of the sequence. Since only a
finite prefix is ever available, :func:`complexity_upper_bound` is an
estimate of the growth on that prefix, not a limit.
"""

from __future__ import annotations

from typing import Sequence

__all__ = ["DimensionSequence", "kunneth_convolve", "complexity_upper_bound"]

DimensionSequence = tuple[int, ...]


def _check(seq: Sequence[int], name: str) -> DimensionSequence:
    seq = tuple(seq)
    for v in seq:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name}: dimensions must be integers >= 1, got {v!r}")
    return seq


def kunneth_convolve(a: Sequence[int], b: Sequence[int]) -> DimensionSequence:
    """``c_t = sum_{s <= t} a_s b_{t-s}`` for every t both prefixes determine."""
    a, b = _check(a, "a"), _check(b, "b")
    if not a or not b:
        raise ValueError("convolution needs nonempty sequences")
    n = min(len(a), len(b))
    return tuple(sum(a[s] * b[t - s] for s in range(t + 1)) for t in range(n))


def complexity_upper_bound(seq: Sequence[int], tolerance: float = 1.5, max_s: int = 64) -> int:
    """Smallest s for which ``seq_t / (t+1)^(s-1)`` looks bounded on the prefix.

    "Looks bounded" means the largest ratio over the later half of the prefix
    is at most ``tolerance`` times the largest ratio over the earlier half;
    a ratio that still grows linearly doubles between the halves and fails.
    The empty sequence (the resolution of a projective module) gives 0.
    Raises ValueError when no s up to ``max_s`` qualifies.
    """
    seq = _check(seq, "seq")
    if not seq:
        return 0
    n = len(seq)
    head = range(0, (n + 1) // 2)
    tail = range(n // 2, n)
    # positive dimensions over an unbounded index never stay bounded at s = 0
    for s in range(1, max_s + 1):
        ratios = [seq[t] / (t + 1) ** (s - 1) for t in range(n)]
        if max(ratios[t] for t in tail) <= tolerance * max(ratios[t] for t in head):
            return s
    raise ValueError(f"no polynomial growth bound up to s = {max_s}")
