"""Render the martini-glass construction and inspect its true optimum.

The construction is designed so that a long vertical purple edge p_N p_S,
crossed by every other purple edge, should appear in the minimum solution.
Solving it exactly shows that it never does: attaching p_N and p_S directly to
the circle of purple points costs barely more than the vertical edge alone and
saves the whole top chord. The rendered SVGs let you compare the intended
shape with the computed optimum.

Usage: python3 demos/crossing_construction.py [out_dir]
"""

import sys
from pathlib import Path

from rbpspan.exact import solve_exact
from rbpspan.generators import MartiniParams, gen_martini
from rbpspan.svg import render_svg


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
    result = gen_martini(MartiniParams(m=1, chain_points=2))
    instance = result.instance
    solution = solve_exact(instance)

    p_n, p_s = result.landmarks["p_N"], result.landmarks["p_S"]
    vertical = (min(p_n, p_s), max(p_n, p_s))
    pairs = solution.edge_set.pairs()
    print(f"points: {instance.n}, optimum weight: {solution.weight:.6f}")
    print(f"vertical purple edge p_N p_S in optimum: {vertical in pairs}")
    print(f"purple crossings in optimum: {solution.purple_crossings}")
    print("purple edges:", [p for p in pairs
                            if instance.color_of(p[0]) == instance.color_of(p[1]) == 2])

    points_svg = out_dir / "martini_points.svg"
    solved_svg = out_dir / "martini_optimum.svg"
    points_svg.write_text(render_svg(instance))
    solved_svg.write_text(render_svg(instance, solution.edge_set))
    print(f"wrote {points_svg} and {solved_svg}")


if __name__ == "__main__":
    main()
