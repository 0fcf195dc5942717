"""On-disk cache of per-degree echelon rows.

One file per (presentation key, degree).  The file name is the hex digest
of those fields.  Layout::

    weylcalc-cache v1 key=<key> degree=<d> gens=<g> relations=<digest>
    <pivot-index> <monomial-index>:<num>/<den> <monomial-index>:<num>/<den> ...
    ...

Monomial indices are positions in the lexicographic order of all words of
degree d (the base-g value of the word).  Each line is one reduced echelon
row whose pivot is a leading word not already forced by lower degrees; the
rest of the degree-d echelon basis follows from those of degree d - 1.
Writes go to a temporary file that is renamed into place.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from typing import Dict, Optional, Tuple

from gmpy2 import mpq

VERSION = "weylcalc-cache v1"
ENV_VAR = "WEYLCALC_CACHE_DIR"
SUFFIX = ".ech"

Word = Tuple[int, ...]


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def default_dir() -> Optional[str]:
    return os.environ.get(ENV_VAR)


def header(key: str, degree: int, ngens: int, rel_digest: str) -> str:
    return f"{VERSION} key={key} degree={degree} gens={ngens} relations={rel_digest}"


def level_path(cache_dir: str, key: str, degree: int) -> str:
    name = digest(f"{key}\x00{degree}")[:32] + SUFFIX
    return os.path.join(cache_dir, name)


def _index(w: Word, g: int) -> int:
    k = 0
    for a in w:
        k = k * g + a
    return k


def _word(k: int, d: int, g: int) -> Word:
    out = []
    for _ in range(d):
        k, r = divmod(k, g)
        out.append(r)
    return tuple(reversed(out))


def write_rows(path: str, head: str, rows: Dict[Word, Dict[Word, object]], g: int) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    lines = [head]
    for pword in sorted(rows, key=lambda w: _index(w, g)):
        entries = rows[pword]
        parts = [str(_index(pword, g))]
        for w in sorted(entries, key=lambda w: _index(w, g)):
            c = mpq(entries[w])
            parts.append(f"{_index(w, g)}:{c.numerator}/{c.denominator}")
        lines.append(" ".join(parts))
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".", prefix=".tmp-", suffix=SUFFIX)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_rows(path: str, head: str) -> Optional[Dict[Word, Dict[Word, mpq]]]:
    """Rows stored at ``path``, or None when absent or written for another presentation."""
    try:
        with open(path) as fh:
            first = fh.readline().rstrip("\n")
            if first != head:
                return None
            fields = dict(f.split("=", 1) for f in first.split()[2:])
            d = int(fields["degree"])
            g = int(fields["gens"])
            out: Dict[Word, Dict[Word, mpq]] = {}
            for line in fh:
                parts = line.split()
                if not parts:
                    continue
                pword = _word(int(parts[0]), d, g)
                entries = {}
                for p in parts[1:]:
                    k, frac = p.split(":")
                    num, den = frac.split("/")
                    entries[_word(int(k), d, g)] = mpq(int(num), int(den))
                out[pword] = entries
            return out
    except FileNotFoundError:
        return None


def list_entries(cache_dir: str):
    """(file name, header line, row count) for every cache file in the directory."""
    if not os.path.isdir(cache_dir):
        return []
    out = []
    for name in sorted(os.listdir(cache_dir)):
        if not name.endswith(SUFFIX) or name.startswith(".tmp-"):
            continue
        path = os.path.join(cache_dir, name)
        with open(path) as fh:
            head = fh.readline().rstrip("\n")
            nrows = sum(1 for line in fh if line.strip())
        out.append((name, head, nrows))
    return out


def clear(cache_dir: str) -> int:
    removed = 0
    for name, _, _ in list_entries(cache_dir):
        os.unlink(os.path.join(cache_dir, name))
        removed += 1
    return removed
