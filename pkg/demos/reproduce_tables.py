"""Recompute stored residue rows for the small catalog graphs.

Walks every catalog entry with a stored completed graph up to five
loops, recomputes its extended-graph-permanent sequence from scratch
with two different algorithms, and prints the residues next to the
stored row.
"""

from egperm.catalog import load_catalog
from egperm.sequences import canonicalize_sign, egp


def main() -> None:
    print(f"{'graph':>8}  {'p':>3}  stored  reduced  cofactor")
    for entry in load_catalog():
        if entry.loops > 5 or not entry.has_edges:
            continue
        g = entry.decompletion()
        reduced = canonicalize_sign(egp(g, 13, algorithm="reduced"))
        cofactor = canonicalize_sign(egp(g, 13, algorithm="cofactor"))
        for a, b in zip(reduced.values, cofactor.values):
            stored = entry.row[a.prime]
            flag = "" if a.residue == b.residue == stored else "  <-- MISMATCH"
            print(f"{entry.name:>8}  {a.prime:>3}  {stored:>6}  {a.residue:>7}"
                  f"  {b.residue:>8}{flag}")
        print()


if __name__ == "__main__":
    main()
