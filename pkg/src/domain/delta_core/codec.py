"""Structured text for elements: ``t | f0 pairs | f'_1 pairs | ...`` with pairs ``site:id``."""

from __future__ import annotations

from .element import DeltaElement, DeltaGroup, Sites
from .errors import ElementFormatError


def _pairs(sites: Sites) -> str:
    return " ".join(f"{s}:{v}" for s, v in sites)


def encode_element(x: DeltaElement) -> str:
    return " | ".join([str(x.t), _pairs(x.f0), *(_pairs(level) for level in x.fprime)])


def _parse_pairs(chunk: str, position: int) -> dict[int, int]:
    values: dict[int, int] = {}
    for token in chunk.split():
        site, sep, value = token.partition(":")
        try:
            if not sep:
                raise ValueError(token)
            values[int(site)] = int(value)
        except ValueError as exc:
            raise ElementFormatError(
                f"malformed pair {token!r} in field {position}", token=token
            ) from exc
    return values


def decode_element(delta: DeltaGroup, text: str) -> DeltaElement:
    chunks = [chunk.strip() for chunk in text.strip().split("|")]
    try:
        t = int(chunks[0])
    except ValueError as exc:
        raise ElementFormatError(
            "element text must start with the cursor", token=chunks[0]
        ) from exc
    f0 = _parse_pairs(chunks[1], 1) if len(chunks) > 1 else {}
    primes = [_parse_pairs(chunk, i) for i, chunk in enumerate(chunks[2:], start=2)]
    return delta.make(t, f0, primes)


__all__ = ["decode_element", "encode_element"]
