from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path


def atomic_write(destination, data: bytes) -> int:
    """Write bytes to a path via temp file + rename, or to an open binary handle."""
    if hasattr(destination, "write"):
        destination.write(data)
        return len(data)
    path = Path(destination)
    fd, tmp = tempfile.mkstemp(dir=path.parent if str(path.parent) else ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return len(data)


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()
