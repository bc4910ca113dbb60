#!/usr/bin/env python3
"""Attached nilpotent orbits of the isolated unipotent parameters.

A strict core (x_1 .. ; y_1 ..) in family D is attached to the orbit of
so(4n) with partition columns (2x_i, 2x_i-1, 2y_i+1, 2y_i).  The model case
(n; 0) lands on the columns (2n, 2n-1, 1) of dimension 4n^2, and every core
satisfies the codimension identity linking it to its half-size shadow.
"""

from spindual import attach_orbit, codim_identity_holds, nilcone_dim, orbit_dim
from spindual.spinclass import StringPairs

print("Model orbits of the single-string cores (n; 0):")
for n in range(1, 7):
    core = StringPairs("D", ((n, 0),))
    orbit = attach_orbit(core)
    print(f"  n={n}: {orbit}, dim {orbit_dim(orbit)} = 4n^2")

print("\nA two-column core and its codimension bookkeeping:")
core = StringPairs("D", ((3, 2), (2, 0)))
orbit = attach_orbit(core)
n_amb = orbit.ambient
print(f"  core {core} -> {orbit}")
print(f"  dim orbit = {orbit_dim(orbit)}, dim nilpotent cone = {nilcone_dim(n_amb)}")
print(f"  codimension identity holds: {codim_identity_holds(core)}")

print("\nFamily B example, with the trailing unit column convention:")
core = StringPairs("B", ((1, 1),))
orbit = attach_orbit(core)
print(f"  core {core} -> {orbit}, dim {orbit_dim(orbit)}")
