#!/usr/bin/env python3
"""Reproduce the reference p=7, u=(2,4,5) run: the first seven partial
quotients and the 65-entry degree and leading-coefficient sequences."""
from __future__ import annotations

import time

from hypercf import PrimeField, build_spec, expand, pattern_equation
from hypercf.cli import quotient_lines


def main() -> None:
    field = PrimeField(7)
    spec = build_spec(field, (2, 4, 5))
    equation = pattern_equation(spec)
    start = time.perf_counter()
    run = expand(equation, 65)
    elapsed = time.perf_counter() - start
    print("p= 7")
    seven = run.quotients[:7]
    print(quotient_lines(seven)[0])
    print(f"degrees {run.quotients.degrees()}")
    print(f"lead.coef. {run.quotients.leading_coefficients()}")
    print(f"# 65 steps in {elapsed:.3f}s; max coefficient degree "
          f"{run.max_coeff_degree} (bound {run.coeff_degree_bound})")


if __name__ == "__main__":
    main()
