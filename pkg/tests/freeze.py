"""Regenerate tests/data/frozen.json from the reference computations.

Run once by hand; the tests compare the library against the stored values.
"""

import json
from math import comb
from pathlib import Path

import oracles

HERE = Path(__file__).parent


def main():
    data = {"twist_generators": {}, "twist_pairs_4": [], "swing_generators": {}, "rotation_generators": {},
            "expected_abelian": {}, "rotation_cycles": {}}
    for n in range(2, 8):
        data["twist_generators"][n] = len(oracles.twist_pairs(n))
        data["swing_generators"][n] = 2 ** n - 1
        data["rotation_generators"][n] = 2 ** n - n - 1
    data["twist_pairs_4"] = [[list(b), list(c)] for b, c in oracles.twist_pairs(4)]
    for n in range(3, 7):
        pure = comb(n, 2)
        data["expected_abelian"][n] = {
            "rotation": [1, []], "bkl": [1, []], "artin": [pure, []], "modified_artin": [pure, []],
            "twist": [pure, []], "swing": [pure, []], "boundary_swing": [pure + n, []],
        }
    # rotating B one step clockwise inside itself: a |B|-cycle in the order of B
    for n in range(2, 8):
        data["rotation_cycles"][n] = {
            ",".join(map(str, b)): [list(b)] for b in oracles.subsets(n, 2)
        }
    (HERE / "data" / "frozen.json").write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
