#!/usr/bin/env python3
"""Print the Poincare-series data and continued fractions for the affine
families: numerator tables, series expansions, and the nested fraction of
each diagram rooted at its affine vertex.

Usage:
    python scripts/show_tables.py [--max-rank N] [--terms N]
"""

import argparse

from coxkit.algebra import z_substitute
from coxkit.cfrac import evaluate, expand_cycle, expand_tree, render
from coxkit.kostant import klein_data, klein_types, poincare_series


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=8)
    ap.add_argument("--terms", type=int, default=24)
    args = ap.parse_args()

    for fam, n in klein_types(args.max_rank):
        data = klein_data(fam, n)
        tag = fam.replace("aff", "~") + str(n)
        print(f"== {tag}:  a={data.a}  b={data.b}  h={data.h}  "
              f"|B|={data.order_b}")
        for i, z in enumerate(data.z_table):
            print(f"   Z_{i} = {z.render()}")
        print(f"   Z_-1 = {data.z_minus1.render()}")
        print(f"   P_0 through q^{args.terms}: "
              f"{poincare_series(data, 0, args.terms).render()}")
        node = (expand_cycle(n) if fam == "affA"
                else expand_tree(data.diagram(), 0))
        print("   fraction value:", evaluate(node).render("z"))
        print(render(node, "ascii"))
        print()


if __name__ == "__main__":
    main()
