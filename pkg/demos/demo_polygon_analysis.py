"""Walk through the polygon-to-norm pipeline on the two bundled curves.

Run with:  python3 demos/demo_polygon_analysis.py
"""

from fractions import Fraction

from slopesmith import (
    PeripheralClass,
    ball_polygon,
    boundary_slopes,
    axis_diameter,
    fundamental_polygon_check,
    list_corpus,
    load_corpus_entry,
    newton_polygon,
    seminorm_from_polygon,
    slope_set_diameter,
)


def describe(name: str) -> None:
    entry = load_corpus_entry(name)
    print(f"== {entry.name} ==")
    print(f"polynomial: {entry.poly}")

    polygon = newton_polygon(entry.poly)
    print(f"polygon vertices: {list(polygon.vertices)}")
    slopes = sorted(s.value for s in boundary_slopes(polygon))
    print(f"boundary slopes: {slopes}")
    print(f"axis diameters: {axis_diameter(polygon, 0)}, {axis_diameter(polygon, 1)}")
    print(f"slope diameter: {slope_set_diameter(slopes)}")

    norm = seminorm_from_polygon(polygon)
    print(f"seminorm functionals (q, p, weight): {norm.functionals}")
    ball = ball_polygon(norm)
    print(f"norm ball radius {ball.radius}, vertices {list(ball.vertices)}")

    report = fundamental_polygon_check(ball, PeripheralClass(1, 0))
    print(f"fundamental-domain check: {'pass' if report.passed else 'fail'}")
    if report.passed:
        print(f"  area {report.area}, recovered filling parameters "
              f"(p, q) = ({report.p}, {report.q})")
    for reason in report.reasons:
        print(f"  reason: {reason}")
    print()


def main() -> None:
    print("bundled corpus:", ", ".join(list_corpus()))
    print()
    for name in list_corpus():
        describe(name)

    print("The sister curve passes the full check: its ball is the area-4")
    print("parallelogram whose marked class (1, 0) sits at an edge midpoint,")
    print("and the recovered filling parameters are (1, 2).  The knot curve")
    print("has slope diameter 8; its thin rectangular ball shows how the")
    print("same machinery reports a failing configuration without raising.")


if __name__ == "__main__":
    main()
