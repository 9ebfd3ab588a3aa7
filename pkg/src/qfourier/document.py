"""Machine-readable result documents and their text renderings.

Complex numbers are stored as ``[re, im]`` pairs, so a complex vector is a
list of pairs and a complex matrix a list of rows of pairs.  Distributions
are plain ``bitstring -> number`` maps.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any

import numpy as np

from .circuit import OutcomeDistribution

SCHEMA_VERSION = "1.0"
BIT_ORDERS = ("msb", "ibm")


def encode(obj: Any, bit_order: str = "msb") -> Any:
    """Convert numpy values and distributions to JSON-native structures."""
    if isinstance(obj, OutcomeDistribution):
        return {k: encode(v) for k, v in obj.display(bit_order).items()}
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return np.stack([obj.real, obj.imag], axis=-1).tolist()
        return obj.tolist()
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, dict):
        return {str(k): encode(v, bit_order) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v, bit_order) for v in obj]
    return obj


def decode_complex(data) -> np.ndarray:
    """Inverse of :func:`encode` for complex vectors and matrices."""
    a = np.asarray(data, dtype=float)
    if a.shape[-1] != 2:
        raise ValueError("complex data must end in [re, im] pairs")
    return a[..., 0] + 1j * a[..., 1]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class OutputDocument:
    command: str
    parameters: dict
    results: dict
    seed: int | None = None
    shots: int | None = None
    bit_order: str = "msb"
    schema_version: str = SCHEMA_VERSION
    timestamp: str = field(default_factory=_now)

    def __post_init__(self):
        if self.bit_order not in BIT_ORDERS:
            raise ValueError(f"unknown bit order {self.bit_order!r}")

    def to_dict(self, *, with_timestamp: bool = True) -> dict:
        d = {
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": encode(self.parameters),
            "results": encode(self.results, self.bit_order),
            "provenance": {"seed": self.seed, "shots": self.shots, "bit_order": self.bit_order},
        }
        if with_timestamp:
            d["timestamp"] = self.timestamp
        return d

    def to_json(self, *, with_timestamp: bool = True) -> str:
        return json.dumps(self.to_dict(with_timestamp=with_timestamp), sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "OutputDocument":
        prov = d["provenance"]
        return cls(
            command=d["command"],
            parameters=d["parameters"],
            results=d["results"],
            seed=prov["seed"],
            shots=prov["shots"],
            bit_order=prov["bit_order"],
            schema_version=d["schema_version"],
            timestamp=d.get("timestamp", ""),
        )

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        return cls.from_dict(json.loads(text))


# text renderings


CHOP = 1e-12


def _real(x: float) -> str:
    return "0" if abs(x) < CHOP else f"{x:.12g}"


def _fmt_number(x) -> str:
    """Scalars and [re, im] pairs to 12 significant digits; noise below
    1e-12 prints as 0 (machine formats keep full precision)."""
    if _is_pair(x):
        re, im = (0.0 if abs(v) < CHOP else v for v in x)
        if im == 0:
            return _real(re)
        if re == 0:
            return f"{im:.12g}j"
        return f"{re:.12g}{im:+.12g}j"
    if isinstance(x, float):
        return _real(x)
    return str(x)


def _is_pair(x) -> bool:
    return isinstance(x, list) and len(x) == 2 and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in x)


def _is_complex_vector(x) -> bool:
    return isinstance(x, list) and bool(x) and all(_is_pair(v) for v in x)


def _is_complex_matrix(x) -> bool:
    return isinstance(x, list) and bool(x) and all(_is_complex_vector(r) for r in x)


def _is_real_matrix(x) -> bool:
    return isinstance(x, list) and bool(x) and all(
        isinstance(r, list) and r and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in r) for r in x
    )


def _inline(v) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return _is_pair(v) or all(isinstance(t, (int, float, str, bool)) for t in v)
    return True


def _render(value, indent: int, lines: list[str]) -> None:
    pad = "  " * indent
    if _is_complex_matrix(value):
        cells = [[_fmt_number(v) for v in row] for row in value]
        width = max(len(c) for row in cells for c in row)
        for row in cells:
            lines.append(pad + "  ".join(c.rjust(width) for c in row))
    elif _is_complex_vector(value):
        lines.append(pad + "[" + ", ".join(_fmt_number(v) for v in value) + "]")
    elif _is_real_matrix(value):
        for row in value:
            lines.append(pad + " ".join(_fmt_number(v) for v in row))
    elif isinstance(value, dict):
        for k, v in value.items():
            if _inline(v):
                shown = _fmt_number(v) if not isinstance(v, list) or _is_pair(v) else [_fmt_number(t) for t in v]
                lines.append(f"{pad}{k}: {shown}")
            else:
                lines.append(f"{pad}{k}:")
                _render(v, indent + 1, lines)
    elif isinstance(value, list):
        for i, v in enumerate(value):
            lines.append(f"{pad}- [{i}]")
            _render(v, indent + 1, lines)
    else:
        lines.append(pad + _fmt_number(value))


def render_pretty(doc: OutputDocument) -> str:
    d = doc.to_dict(with_timestamp=False)
    lines = [f"{d['command']}  (seed={doc.seed}, shots={doc.shots}, bit order={doc.bit_order})"]
    if d["parameters"]:
        lines.append("parameters:")
        _render(d["parameters"], 1, lines)
    _render(d["results"], 0, lines)
    return "\n".join(lines)


def _distributions(results: dict, prefix: str = ""):
    for k, v in results.items():
        name = f"{prefix}{k}"
        if isinstance(v, dict) and v and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v.values()) \
                and all(set(key) <= {"0", "1"} for key in v):
            yield name, v
        elif isinstance(v, dict):
            yield from _distributions(v, name + ".")


def render_csv(doc: OutputDocument) -> str:
    """One row per (distribution, outcome).  Documents without
    distributions raise ValueError."""
    rows = list(_distributions(doc.to_dict()["results"]))
    if not rows:
        raise ValueError(f"command {doc.command!r} produces no distributions; use json or pretty")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["distribution", "outcome", "value"])
    for name, dist in rows:
        for outcome, value in dist.items():
            w.writerow([name, outcome, repr(float(value)) if isinstance(value, float) else value])
    return buf.getvalue()
