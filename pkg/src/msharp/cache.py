"""On-disk coefficient cache for basis elements.

One entry per (level, weight, family, pole order): a plain text file with a
header carrying the key, precision and a digest of the canonical row bytes,
followed by one "exponent coefficient" row per exponent in the window.
Entries are diffable, portable and language-neutral; coefficients are
decimal strings since they overflow machine words quickly.

A cache hit requires the stored precision to reach the requested one; a
digest mismatch is treated as corruption and the entry is rebuilt and
overwritten.  Writes are atomic (write-temp-then-rename), so concurrent
invocations on disjoint keys are safe.
"""

from __future__ import annotations

import hashlib
import os
import tempfile

from .basis import BasisElement, basis_element
from .series import QSeries

_MAGIC = "msharp-cache 1"
ENV_CACHE_DIR = "MSHARP_CACHE_DIR"


def _entry_name(level: int, weight: int, family: str, m: int) -> str:
    return f"N{level}_k{weight}_{family}_m{m}.txt"


def _rows_bytes(rows: list[tuple[int, int]]) -> bytes:
    return "".join(f"{n} {c}\n" for n, c in rows).encode("ascii")


def _digest(rows: list[tuple[int, int]]) -> str:
    return hashlib.sha256(_rows_bytes(rows)).hexdigest()


def cache_write(cache_dir: str, element: BasisElement) -> str:
    """Persist an element's coefficient window; returns the file path."""
    series = element.series
    if not series.is_integral:
        raise ValueError("only integral basis elements are cached")
    rows = [(n, c) for n, c in series.items()]
    path = os.path.join(cache_dir, _entry_name(
        element.level, element.weight, element.family, element.pole_order))
    os.makedirs(cache_dir, exist_ok=True)
    header = (
        f"{_MAGIC}\n"
        f"key level={element.level} weight={element.weight} "
        f"family={element.family} m={element.pole_order}\n"
        f"precision {series.precision}\n"
        f"digest {_digest(rows)}\n"
    )
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(header.encode("ascii"))
            fh.write(_rows_bytes(rows))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def cache_read(cache_dir: str, level: int, weight: int, family: str, m: int,
               precision: int) -> BasisElement | None:
    """Load an entry if present, uncorrupted and at least as precise as requested."""
    path = os.path.join(cache_dir, _entry_name(level, weight, family, m))
    try:
        with open(path, "rb") as fh:
            text = fh.read().decode("ascii")
    except (FileNotFoundError, UnicodeDecodeError):
        return None
    lines = text.splitlines()
    if len(lines) < 4 or lines[0] != _MAGIC:
        return None
    try:
        stored_prec = int(lines[2].split()[1])
        stored_digest = lines[3].split()[1]
        rows = [(int(a), int(b)) for a, b in (ln.split() for ln in lines[4:])]
    except (IndexError, ValueError):
        return None
    if stored_prec < precision or _digest(rows) != stored_digest:
        return None
    if rows and (rows[0][0] != -m or any(b[0] - a[0] != 1 for a, b in zip(rows, rows[1:]))):
        return None
    series = QSeries(-m, [c for _, c in rows], stored_prec)
    return BasisElement(level, weight, m, family, series)


def cached_basis_element(level: int, weight: int, m: int, precision: int,
                         family: str, cache_dir: str | None) -> BasisElement:
    """basis_element with an optional read-through/write-back disk cache."""
    if cache_dir:
        hit = cache_read(cache_dir, level, weight, family, m, precision)
        if hit is not None:
            return hit
    el = basis_element(level, weight, m, precision, family)
    if cache_dir:
        cache_write(cache_dir, el)
    return el
