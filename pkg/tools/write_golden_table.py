"""Write the golden table of every partial permutation of size n as markdown.

Example:
  python tools/write_golden_table.py --n 3 --out docs/table_n3.md
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path


def main() -> None:
    project_root = Path(__file__).resolve().parent.parent
    sys.path.insert(0, str(project_root))

    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--out", type=Path, default=project_root / "docs" / "table_n3.md")
    args = parser.parse_args()

    from steinberg_rs.config import load_config
    from steinberg_rs.formatting import table_markdown
    from steinberg_rs.sweeps import golden_table

    rows = golden_table(args.n, load_config())
    header = (
        f"# Partial permutations of size {args.n}\n\n"
        f"{len(rows)} rows, rank descending then lexicographic by word. "
        "Tableaux are written row by row, rows separated by `/`.\n\n"
    )
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(header + table_markdown(rows) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
    main()
