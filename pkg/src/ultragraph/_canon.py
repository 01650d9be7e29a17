"""Canonical ordering helpers for sets of point/vertex blocks."""

from __future__ import annotations

from typing import Iterable, Sequence


def canonical_blocks(
    blocks: Iterable[frozenset[str]], order: Sequence[str]
) -> tuple[frozenset[str], ...]:
    """Order blocks by the position of their earliest member in `order`.

    Keeps partition/ball-family output deterministic and diffable no
    matter how the blocks were discovered.
    """
    position = {label: i for i, label in enumerate(order)}
    return tuple(sorted(blocks, key=lambda block: min(position[x] for x in block)))


def format_block(block: frozenset[str], order: Sequence[str]) -> str:
    position = {label: i for i, label in enumerate(order)}
    return "{" + ",".join(sorted(block, key=position.__getitem__)) + "}"
