"""Run both obstruction pipelines and print their evidence chains.

Run with:  python3 demos/demo_obstruction_pipelines.py
"""

from fractions import Fraction

from slopesmith import cyclic_verdict, diameter_verdict


def show(report) -> None:
    print(f"pipeline: {report.pipeline}, inputs: {report.inputs}")
    for k, step in enumerate(report.evidence, start=1):
        print(f"  {k}. {step.step} [{step.rule}] {step.value}")
    print(f"verdict: {report.verdict}")
    print()


def main() -> None:
    print("-- cyclic pipeline at ratio 2 --")
    show(cyclic_verdict(Fraction(2)))

    print("-- cyclic pipeline at the unit ratio (the curve factors) --")
    show(cyclic_verdict(Fraction(1)))

    print("-- diameter pipeline over small coprime pairs --")
    for p, q in [(0, 1), (1, 2), (1, 3), (2, 3), (3, 5), (2, 5)]:
        verdict = diameter_verdict(p, q).verdict
        print(f"  (p, q) = ({p}, {q}): {verdict}")
    print()
    print("Even q forces the second-variable sign symmetry and odd p, q force")
    print("the double sign symmetry; both are incompatible with a two-slope")
    print("curve of diameter two, so only even p with odd q > 1 survives.")


if __name__ == "__main__":
    main()
