"""Atomic CSV, JSON and SVG writers for lab outputs, plus the oracle provenance log."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402
from pydantic import BaseModel  # noqa: E402

logger = logging.getLogger(__name__)

PROVENANCE_FILE = "provenance.jsonl"
FAILURE_FILE = "failure.json"

Series = Mapping[str, Sequence[tuple[float, float]]]


def to_jsonable(payload: Any) -> Any:
    """Dump models in JSON mode; ints stay exact, rationals become "p/q" strings."""
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json")
    if isinstance(payload, Mapping):
        return {str(k): to_jsonable(v) for k, v in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [to_jsonable(v) for v in payload]
    return payload


def dumps(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2, default=str)


def _replace_atomically(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


class ArtifactStore:
    """Writes every artifact of a run below ``root``; the directory appears on first write."""

    def __init__(self, root: Path) -> None:
        self.root = Path(root)
        self._append_lock = threading.Lock()

    def path(self, name: str) -> Path:
        return self.root / name

    def write_csv(
        self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]
    ) -> Path:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        target = self.path(name)
        _replace_atomically(target, buffer.getvalue().encode("utf-8"))
        logger.info("artifact csv path=%s", target)
        return target

    def write_json(self, name: str, payload: Any) -> Path:
        target = self.path(name)
        _replace_atomically(target, (dumps(payload) + "\n").encode("utf-8"))
        logger.info("artifact json path=%s", target)
        return target

    def write_plot(
        self,
        name: str,
        series: Series,
        *,
        title: str,
        xlabel: str,
        ylabel: str,
        logx: bool = False,
        logy: bool = False,
    ) -> Path:
        """Static SVG line plot, one line per series."""
        fig = Figure(figsize=(6.4, 4.0), constrained_layout=True)
        ax = fig.add_subplot()
        for label, points in series.items():
            if not points:
                continue
            xs, ys = zip(*points)
            ax.plot(xs, ys, marker="o", label=label)
        if logx:
            ax.set_xscale("log")
        if logy:
            ax.set_yscale("log")
        ax.set_title(title)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.grid(True, alpha=0.3)
        if len(series) > 1:
            ax.legend(loc="best", fontsize=8)
        buffer = io.BytesIO()
        fig.savefig(buffer, format="svg")
        target = self.path(name)
        _replace_atomically(target, buffer.getvalue())
        logger.info("artifact svg path=%s", target)
        return target

    def append_provenance(self, record: Mapping[str, Any]) -> Path:
        """Append one JSON line; concurrent tasks share the file through a lock."""
        target = self.path(PROVENANCE_FILE)
        line = json.dumps(to_jsonable(record), sort_keys=True, default=str) + "\n"
        with self._append_lock:
            target.parent.mkdir(parents=True, exist_ok=True)
            with target.open("a", encoding="utf-8") as handle:
                handle.write(line)
        return target

    def write_failure(self, record: Mapping[str, Any]) -> Path:
        return self.write_json(FAILURE_FILE, record)


__all__ = ["FAILURE_FILE", "PROVENANCE_FILE", "ArtifactStore", "dumps", "to_jsonable"]
