"""Build a random Fano section, print its dual quartic and run the sampled checks.

Run with ``python demos/fano_section.py [seed]``.
"""

import random
import sys

from sp3geom.checks import random_axis
from sp3geom.fano import analyse_section, dual_quartic, random_section, section_through_line
from sp3geom.incidence import line_from_axis

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1

sec = random_section(seed)
dq = dual_quartic(sec)
print(f"seed {seed}: dual quartic")
print(" ", dq.form)
print("  smooth:", dq.smooth)

print("\nchecks on 20 sampled points at 60 digits:")
for check in analyse_section(sec, 20, 60):
    res = "" if check.residual is None else f"  residual {float(check.residual):.2e}"
    print(f"  {check.name:18s} {'pass' if check.passed else 'FAIL'}{res}")

axis = random_axis(random.Random(seed))
line = line_from_axis(axis)
sec = section_through_line(axis, seed)
print("\nsection through a line, section property of the curve C_L:")
check = analyse_section(sec, 20, 60, line)[-1]
print(f"  {check.name} {'pass' if check.passed else 'FAIL'}  residual {float(check.residual):.2e}")
