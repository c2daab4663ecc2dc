#!/usr/bin/env python3
"""Hunt for exponent multisets summing to 1 and the triangles realizing them.

Every triangle signature is such a multiset; whether every such multiset
is some triangle's signature is open. This script searches both sides
within bounds and prints which abstract solutions have (or lack) a
triangle match. With the defaults, {(2,0),(1,1),(0,1)} first looks
unmatched at small bounds and is then picked up by the (2,5) triangle.
"""

import argparse

from latticechains.explorer import (
    SearchCapExceeded,
    match_signature,
    search_unit_multisets,
)


def fmt(sig) -> str:
    return "{" + ",".join(f"({a},{b})" for a, b in sorted(sig.pairs, reverse=True)) + "}"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-a", type=int, default=3)
    parser.add_argument("--max-b", type=int, default=1)
    parser.add_argument("--max-size", type=int, default=4)
    parser.add_argument("--max-m", type=int, default=6)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--node-cap", type=int, default=500_000)
    args = parser.parse_args()

    try:
        found = search_unit_multisets(args.max_a, args.max_b, args.max_size,
                                      node_cap=args.node_cap)
    except SearchCapExceeded as exc:
        print(f"search cap hit: {exc}")
        return 2

    print(f"{len(found)} unit multiset(s) with a <= {args.max_a}, "
          f"b <= {args.max_b}, size <= {args.max_size}")
    unmatched = 0
    for sig in found:
        matches = match_signature(sig, args.max_m, args.max_n)
        if matches:
            shown = ", ".join(f"({m},{n})" for m, n in matches)
            print(f"  {fmt(sig)}  <- triangles {shown}")
        else:
            unmatched += 1
            print(f"  {fmt(sig)}  <- no triangle up to ({args.max_m},{args.max_n})")
    if unmatched:
        print(f"{unmatched} multiset(s) unmatched within these bounds; "
              "larger triangles may still realize them")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
