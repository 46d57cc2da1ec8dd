"""Gradient circle maps and their winding numbers.

For a form with all roots real the normalized gradient map winds -(n-1) times
around the circle and its rotated companion winds -n times. A form like
x^3 + y^3 has a gradient confined to one quadrant, so its map does not wind.
"""
import numpy as np

from realforms import BinaryForm, degree_phi_exact, parse_form, winding_number_numeric
from realforms.circle import sample_map
from realforms.errors import ExactMethodInapplicable

forms = {
    "all real, n=3": parse_form("x^2*y + x*y^2"),
    "all real, n=5": BinaryForm.from_roots([-2, -1, 0, 1, 2]),
    "one real root": parse_form("x^3 + y^3"),
    "no real roots": parse_form("x^4 + x^2*y^2 + y^4"),
}

for label, f in forms.items():
    phi = winding_number_numeric(f, "phi")
    psi = winding_number_numeric(f, "psi")
    try:
        exact = degree_phi_exact(f)
    except ExactMethodInapplicable:
        exact = "n/a (Hessian has a real root)"
    print(f"{label:15s} deg phi {phi.degree:3d}  deg psi {psi.degree:3d}  exact {exact}")

# the angular velocity of phi is H / ((n - 1) |grad f|^2), negative everywhere for real-rooted forms
f = forms["all real, n=5"]
thetas = np.linspace(0, 2 * np.pi, 9)
*_, velocity = sample_map(f, "phi", thetas)
print("angular velocity samples:", np.round(velocity, 3))
