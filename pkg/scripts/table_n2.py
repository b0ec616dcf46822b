"""Print the two-variable table with the provenance of each cell."""
import argparse

from hermsig.constructions import format_table, table_metadata


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--no-certify", action="store_true", help="skip building certificates for the constructive cells")
    args = ap.parse_args()
    meta = table_metadata(2, certify=not args.no_certify)
    print(format_table(meta))
    print()
    for (A, B), cell in sorted(meta["cells"].items()):
        extra = ""
        if "projective_degrees" in cell:
            extra = f" degrees {cell['projective_degrees']}"
        status = cell.get("status", "")
        print(f"({A},{B}) {cell['value']:>2}  {cell['source']} {status}{extra}".rstrip())


if __name__ == "__main__":
    main()
