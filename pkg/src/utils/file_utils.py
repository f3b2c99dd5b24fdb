"""Writing reports and CSV series to disk."""

import csv
import logging
import os
from typing import Any, Dict, List, Optional, Sequence

logger = logging.getLogger(__name__)

ALLOWED_EXTENSIONS = {"json", "csv"}


def allowed_file(filename: str) -> bool:
    """Check if the output extension is one we write."""
    return "." in filename and filename.rsplit(".", 1)[1].lower() in ALLOWED_EXTENSIONS


def ensure_parent(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def write_text(path: str, text: str) -> None:
    ensure_parent(path)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        if not text.endswith("\n"):
            fh.write("\n")
    logger.info(f"Wrote {path}")


def write_csv(
    path: str,
    rows: Sequence[Dict[str, Any]],
    fieldnames: Optional[List[str]] = None,
) -> None:
    """Write dict rows; the header is the union of keys in first-seen order."""
    if fieldnames is None:
        fieldnames = []
        for row in rows:
            for key in row:
                if key not in fieldnames:
                    fieldnames.append(key)
    ensure_parent(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    logger.info(f"Wrote {len(rows)} rows to {path}")
