"""Re-run every batch of explicit constructions and print a one-line summary per batch."""
import argparse
import sys
import time

from hermsig.suites import SUITES, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default="all", choices=["all", *SUITES])
    ap.add_argument("-v", "--verbose", action="store_true", help="list every certificate")
    args = ap.parse_args()
    names = list(SUITES) if args.suite == "all" else [args.suite]
    bad = 0
    for name in names:
        t0 = time.perf_counter()
        certs = run_suite(name)
        claims = sum(len(c.claims) for c in certs)
        failed = [(c.construction, c.params, f.to_dict()) for c in certs for f in c.failures()]
        bad += len(failed)
        print(f"{name}: {len(certs)} certificates, {claims} claims, {len(failed)} failed "
              f"({time.perf_counter() - t0:.1f}s)")
        if args.verbose:
            for c in certs:
                print(f"    {c.status:9} {c.construction} {c.params}")
        for f in failed:
            print("    FAILED", f)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
