"""Project tree scanning and file classification.

Walks a project root, records every regular file with its size, and
classifies each one by extension. The resulting inventory is the "artifacts"
set; the Java source entries are the "components" that downstream parsing
consumes.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum

logger = logging.getLogger(__name__)


class FileKind(str, Enum):
    JAVA_SOURCE = "java_source"
    COMPILED_CLASS = "compiled_class"
    JAR_ARCHIVE = "jar_archive"
    IMAGE = "image"
    OTHER_ARTIFACT = "other_artifact"


_EXTENSION_KINDS = {
    ".java": FileKind.JAVA_SOURCE,
    ".class": FileKind.COMPILED_CLASS,
    ".jar": FileKind.JAR_ARCHIVE,
    ".png": FileKind.IMAGE,
    ".jpg": FileKind.IMAGE,
    ".jpeg": FileKind.IMAGE,
    ".gif": FileKind.IMAGE,
    ".bmp": FileKind.IMAGE,
}


class RootNotFound(Exception):
    """The scan root is missing or not a readable directory."""

    def __init__(self, root: str) -> None:
        super().__init__(f"project root not found or not a directory: {root}")
        self.root = root


@dataclass(frozen=True)
class FileRecord:
    """One regular file: project-relative path (always '/'-separated), byte size, kind."""

    path: str
    size: int
    kind: FileKind


@dataclass
class ProjectInventory:
    root: str
    files: list[FileRecord] = field(default_factory=list)
    scanned_at: str = ""

    @property
    def components(self) -> list[FileRecord]:
        """The Java source subset of the inventory."""
        return [f for f in self.files if f.kind is FileKind.JAVA_SOURCE]


def classify_file(path: str, size: int = 0) -> FileKind:
    """Classify a file by its extension, case-insensitively. Total: never raises."""
    _, ext = os.path.splitext(path)
    return _EXTENSION_KINDS.get(ext.lower(), FileKind.OTHER_ARTIFACT)


def scan_project(root: str) -> ProjectInventory:
    """Inventory every regular file under root, sorted by relative path.

    Hidden entries (names starting with '.') and symbolic links are skipped;
    an empty directory yields an empty inventory. Raises RootNotFound when
    root is missing or not a directory.
    """
    if not os.path.isdir(root):
        raise RootNotFound(root)

    records: list[FileRecord] = []
    for dirpath, dirnames, filenames in os.walk(root, followlinks=False):
        dirnames[:] = sorted(d for d in dirnames if not d.startswith("."))
        for name in sorted(filenames):
            if name.startswith("."):
                continue
            full = os.path.join(dirpath, name)
            if os.path.islink(full):
                logger.info("skipping symbolic link: %s", full)
                continue
            rel = os.path.relpath(full, root).replace(os.sep, "/")
            size = os.stat(full).st_size
            records.append(FileRecord(path=rel, size=size, kind=classify_file(name)))

    records.sort(key=lambda r: r.path)
    scanned_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return ProjectInventory(root=root, files=records, scanned_at=scanned_at)
