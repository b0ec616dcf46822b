"""Print the grid of product signatures (A, B), A + B <= max, built from two indefinite factors."""
import argparse

from hermsig.constructions import Refusal, theorem41_construct
from hermsig.hermitian_form import signature_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-sum", type=int, default=12)
    args = ap.parse_args()
    print(f"{'A':>3} {'B':>3}  {'case':8} {'eps':>8}  s(r1)    s(r2)    status")
    for A in range(args.max_sum + 1):
        for B in range(args.max_sum + 1 - A):
            try:
                c = theorem41_construct(A, B)
            except Refusal:
                print(f"{A:>3} {B:>3}  refused")
                continue
            eps = c.chosen.get("epsilon", "")
            s1 = signature_pair(c.polynomials["r1"])
            s2 = signature_pair(c.polynomials["r2"])
            print(f"{A:>3} {B:>3}  {c.chosen['case']:8} {str(eps):>8}  {str(s1):8} {str(s2):8} {c.status}")


if __name__ == "__main__":
    main()
