"""
The staircase of <7,9,11>
=========================

Corners are the lead exponents.  Standard points with positive x-exponent
are the gaps; the level x = 7 is the ceiling.  Each level is printed as a
grid in the (y1, y2) plane, y3 fixed to 0, with ``#`` for corners and
``o`` for gap points.
"""

from nsgroebner import groebner, staircase

model = staircase.build_staircase(groebner.buchberger((7, 9, 11)))
levels = staircase.gap_points_by_level(model)

for lvl, pts in levels.items():
    print(f"x = {lvl}: {len(pts)} gap points, corners {staircase.corner_slice(model, lvl)}")
    grid = [["." for _ in range(5)] for _ in range(5)]
    for q in staircase.corner_slice(model, lvl):
        if q[2] == 0 and q[0] < 5 and q[1] < 5:
            grid[q[1]][q[0]] = "#"
    for p in pts:
        if p[3] == 0:
            grid[p[2]][p[1]] = "o"
    for row in reversed(grid):
        print("   ", " ".join(row))

print("ceiling:", staircase.ceiling_level(model))
print("gaps:", staircase.gaps_via_staircase(model))
print("elements up to 30:", staircase.elements_via_staircase(model, 30))
