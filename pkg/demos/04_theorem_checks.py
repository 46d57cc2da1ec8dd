"""All real roots versus the derivative pencil.

A square-free form has n distinct real roots exactly when every member
a*f_x + b*f_y of its derivative pencil has n - 1 distinct real roots. The
pencil condition is decided exactly through the discriminant of the pencil,
itself a binary form in (a, b).
"""
from realforms import BinaryForm, parse_form, pencil_discriminant, verify_corollary, verify_theorem1

for f in [parse_form("x^2*y + x*y^2"), parse_form("x^3 + y^3"), BinaryForm.from_roots([0, 1, 3, 7]),
          parse_form("x^4 - x^3*y + 2*y^4")]:
    rep = verify_theorem1(f)
    print(f"{rep.form:40s} A={rep.criterionA!s:5} B={rep.criterionB!s:5} C={rep.criterionC!s:5}"
          f" deg phi={rep.windingPhi} deg psi={rep.windingPsi}")

f = parse_form("x^3 - 3*x*y^2")
print("pencil discriminant of x^3 - 3xy^2:", pencil_discriminant(f))
print(verify_corollary(f).to_dict())
