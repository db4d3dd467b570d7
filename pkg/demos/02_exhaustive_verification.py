"""Certify schemes exhaustively, two independent ways.

The diamond route checks the label of every offset vector with
1 <= |x|+|y| <= k; the gap of any vertex pair equals the label of its
difference vector, so this finite check covers the whole infinite grid.
The window route brute-forces every pair inside a rectangle without that
reduction. Both must agree, on valid and broken schemes alike.
"""

from gridlabel import (
    LabelingScheme,
    check_diamond,
    check_window,
    scheme_params,
)

print("valid schemes:")
for k in (1, 3, 4, 7, 12):
    s = scheme_params(k)
    d = check_diamond(s)
    w = check_window(s, 60, 60)
    print(f"   k={k:2d}: diamond {d.checked_pairs:4d} offsets -> "
          f"{'PASS' if d.passed else 'FAIL'};  window 60x60 "
          f"{w.checked_pairs} pairs -> {'PASS' if w.passed else 'FAIL'}")

print("\na deliberately broken scheme (k=3 with a=b=1, c=12):")
bad = LabelingScheme(k=3, p=1, parity_case="hand-built", a=1, b=1, c=12)
d = check_diamond(bad)
w = check_window(bad, 20, 20)
print(f"   diamond -> {'PASS' if d.passed else 'FAIL'}")
for rep in d.violations:
    print(f"      offset={rep.offset} r={rep.r} "
          f"needs >= {rep.required_gap}, got {rep.actual}")
print(f"   window  -> {'PASS' if w.passed else 'FAIL'}")
shared = {r.offset for r in d.violations} & {r.offset for r in w.violations}
print(f"   shared witness offsets: {sorted(shared)}")
