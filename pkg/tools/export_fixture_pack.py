"""Regenerate the sample content pack used by the web client's tests.

Usage: python3 tools/export_fixture_pack.py [OUT]
"""

from __future__ import annotations

import sys
import tempfile
from pathlib import Path

from saphir.sample import seed_sample
from saphir.store import open_repository

DEFAULT_OUT = (
    Path(__file__).resolve().parent.parent / "frontend" / "tests" / "golden" / "fixture-pack.zip"
)


def build() -> bytes:
    with tempfile.TemporaryDirectory() as tmp:
        repo = open_repository(f"{tmp}/repo")
        seed_sample(repo)
        return repo.export_pack()


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_OUT
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(build())
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
