#!/usr/bin/env python3
"""Measure the acyclic solver against the path-count explosion.

Diamond chains double their emergy-path count per layer, so the general
solver's enumeration cost grows exponentially while the table-based solver
stays linear in the graph size. This prints both next to each other (the
general solver is skipped once it would enumerate past a million paths).
"""

from __future__ import annotations

import time
from fractions import Fraction

from empower.generators import diamond_chain
from empower.dag import solve_dag
from empower.solver import solve_general


def clock(fn) -> tuple[float, Fraction]:
    started = time.perf_counter()
    value = fn()
    return time.perf_counter() - started, value


def main():
    theta = Fraction(7, 3)
    print(f"{'layers':>6} {'nodes':>6} {'paths':>12} {'dag [ms]':>10} {'cotree [ms]':>12}")
    for layers in (2, 5, 10, 15, 20, 25, 30):
        g, arc = diamond_chain(layers, theta)
        dag_time, dag_value = clock(lambda: solve_dag(g, arc))
        assert dag_value == theta
        if 2 ** layers <= 10 ** 6:
            general_time, general_value = clock(lambda: solve_general(g, arc).value)
            assert general_value == theta
            general_cell = f"{general_time * 1000:12.1f}"
        else:
            general_cell = f"{'skipped':>12}"
        print(f"{layers:>6} {len(g.nodes):>6} {2 ** layers:>12} "
              f"{dag_time * 1000:>10.2f} {general_cell}")


if __name__ == "__main__":
    main()
