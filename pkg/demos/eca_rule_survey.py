"""A small survey of elementary cellular automaton rules at four scales.

One rule per dynamical flavor: a fixed-point rule (0), a blinker (1), a
shifter (2), chaotic rules (18, 30), and complex glider rules (54, 110).
Fixed-point rules are flat everywhere; the blinker collapses above b=1; the
chaotic and complex rules separate only as the scale grows.
"""

from infodyn import eca_class_survey

RULES = (0, 1, 2, 18, 30, 54, 110)

print("running 20 instances per rule (N=256, window 2048) ...")
results = eca_class_survey(
    rules=RULES,
    n=256,
    instances=20,
    transient=2048,
    window=2048,
    scales=(1, 2, 4, 8),
    master_seed=3,
)

by_cell = {(r.parameter, r.scale): r.aggregate["mean"] for r in results}
for measure in ("E", "S", "C", "H"):
    print(f"\nmean {measure} per rule and scale:")
    print(f"{'rule':>5}  " + "  ".join(f"{f'b={b}':>7}" for b in (1, 2, 4, 8)))
    for rule in RULES:
        row = "  ".join(f"{by_cell[(rule, b)][measure]:7.4f}" for b in (1, 2, 4, 8))
        print(f"{rule:>5}  {row}")

print(
    "\nnote rule 54's H at b=1: its period-4 background anticorrelates"
    "\nsuccessive states, pushing H well below the uncorrelated 0.5."
)
