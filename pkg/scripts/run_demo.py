"""Drive every CLI verifier against the bundled datasets.

Runs the same entry point as the installed ``tropicalc`` executable and
stops at the first non-zero exit code, so it doubles as a smoke test:

    python3 scripts/run_demo.py
"""

from __future__ import annotations

import sys

from tropicalc.cli import run

COMMANDS = [
    ["--manifest", "showcase", "--csv", "analyze", "--fn", "f"],
    ["--manifest", "showcase", "jensen", "--fn", "f", "--r", "5/2"],
    ["--manifest", "showcase", "pj", "--fn", "f", "--x", "1/2", "--r", "5/2"],
    [
        "--manifest", "parabola_train", "--csv",
        "characteristic", "--fn", "train", "--r-max", "5", "--grid", "1:5:1",
    ],
    ["special", "hyperexp", "--n", "2", "--alpha", "2",
     "--window", "-8", "8", "--tail", "64"],
    ["--manifest", "mirror_parabolas",
     "curve", "cartan", "--curve", "mirror", "--r-max", "4", "--grid", "1:4:1"],
    ["--manifest", "envelope_curve",
     "curve", "compose", "--curve", "env", "--poly", "P"],
    ["--manifest", "mirror_parabolas",
     "curve", "casoratian", "--curve", "mirror"],
    ["--manifest", "envelope_curve",
     "verify", "smt", "--curve", "env", "--poly", "P", "--grid", "3:9:2"],
    ["--manifest", "fermat_staircase",
     "verify", "fermat", "--curve", "h", "--poly", "P1",
     "--grid", "10:40:10"],
    ["--manifest", "fermat_staircase",
     "verify", "fermat", "--curve", "g", "--poly", "P1",
     "--grid", "10:40:10"],
    ["--manifest", "mirror_parabolas",
     "verify", "casoratian-balance", "--curve", "mirror", "--grid", "2:4:2"],
    ["verify", "jensen-sweep", "--count", "10", "--seed", "1"],
    ["verify", "lemma44", "--hyperexp", "2:2:-40:40:64",
     "--c", "1", "--alpha", "2", "--grid", "8:16:4"],
]


def main() -> int:
    for argv in COMMANDS:
        print(f"$ tropicalc {' '.join(argv)}")
        code = run(argv)
        print()
        if code != 0:
            print(f"exited with {code}", file=sys.stderr)
            return code
    print(f"all {len(COMMANDS)} commands passed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
