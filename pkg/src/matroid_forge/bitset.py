"""Edge sets as dense integer bitmasks.

Bit i of a mask stands for the edge with id i.  Python integers are
arbitrary-width, so a single int covers ground sets of any size; equality and
hashing of edge sets are therefore the plain int operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bit(i: int) -> int:
    return 1 << i


def from_ids(ids: Iterable[int]) -> int:
    mask = 0
    for i in ids:
        mask |= 1 << i
    return mask


def to_ids(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_id(mask: int) -> int:
    if not mask:
        raise ValueError("empty mask has no lowest bit")
    return (mask & -mask).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """All subsets of mask, from mask itself down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def format_mask(mask: int) -> str:
    return hex(mask)


def parse_mask(text: str) -> int:
    """Parse a hex bitmask, with or without the leading 0x."""
    text = text.strip()
    try:
        return int(text, 16)
    except ValueError:
        raise ValueError(f"not a hex bitmask: {text!r}") from None
