"""List every outerplanar diameter-2 connected graph up to order n with its
pd and classification, and flag graphs that are only recognized once the
wheel-minus-rim-edges family admits deleting all but one rim edge."""

import argparse

from properdisc.bounds import classify_diameter2_outerplanar, family_d_candidates, is_outerplanar
from properdisc.canon import canonical_key, enumerate_connected_graphs
from properdisc.graph import diameter, emit_graph6
from properdisc.solver import pd_exact


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()

    for n in range(3, args.max_n + 1):
        narrow = {canonical_key(g) for _, _, g in family_d_candidates(n, narrow=True)}
        for g in enumerate_connected_graphs(n):
            if diameter(g) != 2 or not is_outerplanar(g).outerplanar:
                continue
            cls = classify_diameter2_outerplanar(g, check_preconditions=False)
            pd = pd_exact(g).value
            note = ""
            if cls.classification == "family_D" and canonical_key(g) not in narrow:
                note = "  <- needs t = rim - 1"
            agree = (pd == 2) == (cls.classification != "other")
            print(f"{emit_graph6(g):<8} n={n} m={g.m:<2} pd={pd} {cls.classification:<10} "
                  f"{'ok' if agree else 'MISMATCH'}{note}")


if __name__ == "__main__":
    main()
