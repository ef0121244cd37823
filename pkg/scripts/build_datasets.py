"""Regenerate the bundled example datasets in src/tropicalc/data/.

Every dataset is built through the library constructors (so continuity and
shape invariants are enforced) and written with the canonical serializer,
which keeps the files byte-stable and round-trippable.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from tropicalc.curves import FermatForm, TropicalPolynomialMap
from tropicalc.manifest import Manifest, serialize_manifest
from tropicalc.polyseg import piecewise

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "tropicalc" / "data"


def sign_square():
    """sgn(x) * x^2 — smooth at the origin despite the case split."""
    return piecewise([0], [[0, 0, -1], [0, 0, 1]])


def showcase_function():
    """Five-segment degree-3 example with singularities at -2..2."""
    return piecewise(
        [-2, -1, 1, 2],
        [
            [-40, -46, -17, -2],
            [4, 6, 2],
            [1, 2, 1],
            [5, -1],
            [3, 18, -15, 3],
        ],
    )


def parabola_train(half_width: int):
    """Alternating unit arches: -(x-m)(x-m-1) for m >= 0, mirrored for m < 0."""

    def arch(m: int) -> list:
        if m >= 0:
            return [-m * (m + 1), 2 * m + 1, -1]
        return [m * (m + 1), -(2 * m + 1), 1]

    bps = list(range(-half_width, half_width + 1))
    segs = [arch(-half_width - 1)] + [arch(m) for m in bps]
    return piecewise(bps, segs)


def envelope_staircase(k_max: int):
    """-1/2 left of 0, then slope-(4k+2) chords of the square on [2k, 2k+2)."""
    bps = [2 * k for k in range(k_max + 1)]
    segs = [[Fraction(-1, 2)]] + [
        [-2 * k * (2 * k + 2) - Fraction(1, 2), 4 * k + 2] for k in range(k_max + 1)
    ]
    return piecewise(bps, segs)


def odd_staircase(k_max: int):
    """0 left of 1, slope 2k-1 on [2k-1, 2k+1)."""
    bps = [2 * k - 1 for k in range(1, k_max + 1)]
    segs = [[0]] + [[-(2 * k * k - 1), 2 * k - 1] for k in range(1, k_max + 1)]
    return piecewise(bps, segs)


def even_staircase(k_max: int):
    """0 left of 2, slope 2k on [2k, 2k+2)."""
    bps = [2 * k for k in range(1, k_max + 1)]
    segs = [[0]] + [[-2 * k * (k + 1), 2 * k] for k in range(1, k_max + 1)]
    return piecewise(bps, segs)


MAX_OF_COORDINATES = TropicalPolynomialMap(
    (((1, 0), Fraction(0)), ((0, 1), Fraction(0))), 1
)

DATASETS = {
    "showcase": Manifest(functions={"f": showcase_function()}),
    "sign_square": Manifest(
        functions={"f": sign_square(), "g": piecewise([], [[0, 1]])}
    ),
    "parabola_train": Manifest(functions={"train": parabola_train(8)}),
    "envelope_curve": Manifest(
        functions={"f0": sign_square(), "f1": envelope_staircase(5)},
        curves={"env": ("f0", "f1")},
        polynomials={"P": MAX_OF_COORDINATES},
    ),
    "fermat_flat": Manifest(
        functions={"zero": piecewise([], [[0]]), "lin2": piecewise([], [[0, 2]])},
        curves={"flat": ("zero", "lin2")},
        polynomials={"Q": FermatForm((Fraction(1), Fraction(2)), 2)},
    ),
    "fermat_staircase": Manifest(
        functions={
            "zero": piecewise([], [[0]]),
            "f1": odd_staircase(22),
            "f2": even_staircase(21),
        },
        curves={"g": ("zero", "f1"), "h": ("f1", "f2")},
        polynomials={"P1": FermatForm((Fraction(1), Fraction(1)), 1)},
    ),
    "mirror_parabolas": Manifest(
        functions={
            "f0": sign_square(),
            "f1": piecewise([0], [[0, 0, 1], [0, 0, -1]]),
        },
        curves={"mirror": ("f0", "f1")},
    ),
}


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for name, manifest in sorted(DATASETS.items()):
        path = DATA_DIR / f"{name}.json"
        path.write_text(serialize_manifest(manifest), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
