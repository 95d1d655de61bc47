"""JSON sample files.

::

    {"n": 8, "format": {"int_bits": 1, "frac_bits": 15},
     "samples": [[re, im], ...]}

``re``/``im`` are decimal reals quantized into ``format`` on read.  With
``"raw": true`` they are integer mantissas instead.  Values written by
``write_sample_file`` are exact multiples of the format's ulp, so a write/read
round trip is lossless at the mantissa level in either encoding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .numerics import FixedComplex, Fx, FxFormat
from .oracle import is_power_of_two


class SampleFileError(ValueError):
    """Malformed or inconsistent sample file."""


@dataclass(frozen=True)
class SampleFile:
    n: int
    format: FxFormat
    samples: tuple[FixedComplex, ...]

    def __post_init__(self) -> None:
        if not is_power_of_two(self.n):
            raise SampleFileError(f"n={self.n} must be a power of two")
        if len(self.samples) != self.n:
            raise SampleFileError(f"n={self.n} but {len(self.samples)} samples given")

    def complex_values(self) -> list[complex]:
        return [complex(s) for s in self.samples]


def parse_sample_json(doc) -> SampleFile:
    try:
        n = doc["n"]
        fmt = FxFormat(int(doc["format"]["int_bits"]), int(doc["format"]["frac_bits"]))
        pairs = doc["samples"]
        raw = bool(doc.get("raw", False))
    except (KeyError, TypeError) as exc:
        raise SampleFileError(f"missing or malformed field: {exc}") from exc
    except ValueError as exc:
        raise SampleFileError(f"bad format: {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool):
        raise SampleFileError("n must be an integer")
    if not is_power_of_two(n):
        raise SampleFileError(f"n={n} must be a power of two")
    if not isinstance(pairs, list) or len(pairs) != n:
        raise SampleFileError(f"expected {n} samples")
    samples = []
    for i, pair in enumerate(pairs):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise SampleFileError(f"sample {i} is not an [re, im] pair")
        try:
            if raw:
                samples.append(FixedComplex(Fx(_as_int(pair[0]), fmt), Fx(_as_int(pair[1]), fmt)))
            else:
                samples.append(FixedComplex.from_complex(complex(float(pair[0]), float(pair[1])), fmt))
        except (TypeError, ValueError) as exc:
            raise SampleFileError(f"sample {i}: {exc}") from exc
    return SampleFile(n, fmt, tuple(samples))


def _as_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError(f"raw mantissa {v!r} is not an integer")
    return v


def read_sample_file(path: str | Path) -> SampleFile:
    """Raises ``OSError`` for I/O trouble and ``SampleFileError`` for bad content."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SampleFileError(f"{path}: not valid JSON ({exc})") from exc
    return parse_sample_json(doc)


def sample_json(sf: SampleFile, raw: bool = False) -> dict:
    if raw:
        pairs = [list(s.raw) for s in sf.samples]
    else:
        pairs = [[float(s.re), float(s.im)] for s in sf.samples]
    doc = {"n": sf.n,
           "format": {"int_bits": sf.format.int_bits, "frac_bits": sf.format.frac_bits},
           "samples": pairs}
    if raw:
        doc["raw"] = True
    return doc


def write_sample_file(path: str | Path, sf: SampleFile, raw: bool = False) -> None:
    Path(path).write_text(json.dumps(sample_json(sf, raw), indent=1) + "\n")
