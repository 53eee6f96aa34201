"""Run every solver on the same small instance and compare the results.

Usage: python3 demos/compare_solvers.py
"""

from rbpspan.approx import approx_a, approx_union
from rbpspan.exact import solve_exact
from rbpspan.graphops import stats_block
from rbpspan.line import solve_line
from rbpspan.model import parse_instance
from rbpspan.oracle import oracle_forest, oracle_subsets

INSTANCE = """
P 0 0
P 10 0
R 4 0
B 6 0
R 1 0
B 9 0
"""


def main():
    instance = parse_instance(INSTANCE)
    solvers = [
        ("exact", solve_exact),
        ("line", solve_line),
        ("approx-union", approx_union),
        ("approx-a", approx_a),
        ("oracle-forest", oracle_forest),
        ("oracle-subsets", oracle_subsets),
    ]
    for name, solver in solvers:
        solution = solver(instance)
        print(f"--- {name}")
        print("edges:", " ".join(f"{u}-{v}" for u, v in solution.edge_set.pairs()))
        print(stats_block(solution))


if __name__ == "__main__":
    main()
