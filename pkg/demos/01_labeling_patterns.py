"""Render the modular labeling patterns for a few separation parameters.

Each scheme assigns L(x, y) = (a*x + b*y) mod c. The pattern is periodic
with period c in both directions, so a small window already shows the
whole structure.
"""

from gridlabel import label, label_window, scheme_params

for k in (1, 3, 4, 7):
    s = scheme_params(k)
    print(f"k={k}: L(x,y) = ({s.a}*x + {s.b}*y) mod {s.c}   [{s.parity_case}]")
    grid = label_window(s, 0, 0, 10, 6)
    cell = len(str(s.c - 1))
    for row in range(5, -1, -1):  # print top row = largest y
        print("   " + " ".join(f"{int(v):>{cell}}" for v in grid[row]))
    print()

s = scheme_params(3)
print("negative coordinates use the non-negative remainder:")
for v in [(-1, 0), (-3, 0), (-2, -2)]:
    print(f"   L{v} = {label(s, v)}")

print("\nperiodicity: L(x+c, y) == L(x, y+c) == L(x, y)")
for v in [(0, 0), (5, -7)]:
    c = s.c
    assert label(s, v) == label(s, (v[0] + c, v[1])) == label(s, (v[0], v[1] + c))
    print(f"   L{v} = {label(s, v)} (checked against both shifts by c={c})")
