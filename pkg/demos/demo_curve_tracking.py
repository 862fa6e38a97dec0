"""Track fiber roots of the bundled knot curve along paths in the first
coordinate and integrate the volume form, demonstrating its exactness.

Run with:  python3 demos/demo_curve_tracking.py
"""

import math

from slopesmith import (
    fiber_roots,
    load_corpus_entry,
    track_curve,
    volume_change,
)


def main() -> None:
    poly = load_corpus_entry("fig8-knot").poly
    print(f"curve: {poly}")

    roots = fiber_roots(poly, 1.2)
    print(f"fiber over m = 1.2: {[f'{r:.6f}' for r in roots]}")
    print()

    # a closed, contractible loop around the base point
    legs = 36
    loop = [
        1.2 + 0.05 * complex(math.cos(2 * math.pi * k / legs),
                             math.sin(2 * math.pi * k / legs))
        for k in range(legs + 1)
    ]
    start = (loop[0], fiber_roots(poly, loop[0])[0])
    path = track_curve(poly, start, loop, step=0.005)
    gap = abs(path.samples[-1][1] - path.samples[0][1])
    print(f"closed loop: {len(path.samples)} samples, return gap {gap:.1e}, "
          f"volume change {volume_change(path):+.2e}")

    # two homotopic detours between the same endpoints
    b0 = fiber_roots(poly, 1.15)[0]
    upper = track_curve(poly, (1.15, b0), [1.15, 1.25 + 0.12j, 1.35], step=0.002)
    lower = track_curve(poly, (1.15, b0), [1.15, 1.25 - 0.15j, 1.35], step=0.002)
    vu, vl = volume_change(upper), volume_change(lower)
    print(f"upper detour: volume change {vu:+.9f}")
    print(f"lower detour: volume change {vl:+.9f}")
    print(f"difference: {abs(vu - vl):.2e}")
    print()
    print("A contractible loop integrates to zero and homotopic paths agree,")
    print("which is what exactness of the volume form on the curve means in")
    print("numbers.  Reversing a path negates its integral:")
    print(f"  reversed upper detour: {volume_change(upper.reversed()):+.9f}")


if __name__ == "__main__":
    main()
