"""Rewrite ``tests/golden_normal_forms.json`` from the current normal forms.

    python tests/generate_golden.py           # list the words that would change
    python tests/generate_golden.py --write   # rewrite the golden file

Only write when the change in behaviour is intentional.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from tests.snapshot_util import GOLDEN_PATH, build_all_snapshots, changed_words, load_golden, write_golden


def main(argv: list[str]) -> int:
    snapshots = build_all_snapshots()
    golden = load_golden() if os.path.exists(GOLDEN_PATH) else {}
    changed = changed_words(snapshots, golden)
    for word in changed:
        print(f"{word}: {golden.get(word)} -> {snapshots.get(word)}")
    if "--write" in argv:
        write_golden(snapshots)
        print(f"wrote {len(snapshots)} snapshots, {len(changed)} changed")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
