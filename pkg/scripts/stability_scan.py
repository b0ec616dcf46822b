"""Sweep the stable range for one n and report decompositions, degrees and failures."""
import argparse
import time

from hermsig.constructions import M, T, theorem82_construct


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--span", type=int, default=10, help="sums A + B from M(n) to M(n) + span")
    ap.add_argument("--boost", type=int, default=0)
    ap.add_argument("--show", action="store_true", help="print one line per certificate")
    args = ap.parse_args()
    n = args.n
    print(f"n = {n}, T(n) = {T(n)}, M(n) = {M(n)}")
    t0 = time.perf_counter()
    count, bad, degs = 0, [], []
    for s in range(M(n), M(n) + args.span + 1):
        for A in range(2, s - 1):
            c = theorem82_construct(n, A, s - A, degree_boost=args.boost)
            count += 1
            degs.append(c.data["projective_degree"])
            if not c.verified:
                bad.append((A, s - A))
            if args.show:
                ch = c.chosen
                print(f"  ({A},{s - A}) {ch.get('orientation', '-')} N={ch.get('N', '-')} a={ch['a']} b={ch['b']} "
                      f"D={c.data['projective_degree']} {c.status}")
    print(f"{count} certificates, {len(bad)} failed, projective degrees {min(degs)}..{max(degs)}, "
          f"{time.perf_counter() - t0:.1f}s")
    if bad:
        print("failed:", bad)


if __name__ == "__main__":
    main()
