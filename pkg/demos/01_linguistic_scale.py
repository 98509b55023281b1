"""Tour of linguistic term sets and their numeric scale.

Shows how the two-branch exponential scale places 2*phi + 1 terms in [0, 1],
how the base parameter bends the spacing, and the term algebra (negation,
min/max, nearest-term mapback) the simulator builds on.
"""

import numpy as np

from opiniondyn import (
    build_term_set,
    nearest_term,
    negate_term,
    term_max,
    term_min,
    term_value,
)


def show_scale(phi: int, base: float) -> None:
    ts = build_term_set(phi, base)
    print(f"\nphi={phi}, base={base} -> {ts.size} terms")
    print("  index:", "  ".join(f"h{j}" for j in range(ts.size)))
    print("  value:", "  ".join(f"{v:.4f}" for v in ts.values))
    sym = np.max(np.abs(ts.values + ts.values[::-1] - 1.0))
    print(f"  symmetry residual max |v_j + v_(2phi-j) - 1| = {sym:.2e}")


def main() -> None:
    print("=== The seven-term scale used throughout the demos ===")
    show_scale(3, 2.0)

    print("\n=== The base parameter controls compression toward 0.5 ===")
    for base in (1.5, 2.0, 3.0):
        show_scale(2, base)

    ts = build_term_set(3, 2.0)
    print("\n=== Term algebra ===")
    print(f"negate(h1) = h{negate_term(ts, 1)}   (mirror about the midpoint)")
    print(f"negate(h3) = h{negate_term(ts, 3)}   (the midpoint is self-negating)")
    print(f"max(h2, h5) = h{term_max(ts, 2, 5)}, min(h2, h5) = h{term_min(ts, 2, 5)}")

    print("\n=== Nearest-term mapback (how averaged opinions re-enter the scale) ===")
    for value in (0.40, 0.46, 0.50, 0.62, 0.93):
        j = nearest_term(ts, value)
        print(f"  {value:.2f} -> h{j} (value {term_value(ts, j):.4f})")


if __name__ == "__main__":
    main()
