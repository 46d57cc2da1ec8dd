"""Real and complex Waring rank.

A real form of degree n has real rank n exactly when all of its roots are real.
Below that, the rank is found by searching the apolar ideal for a form with
distinct real roots, and every hit is turned into an explicit decomposition.
"""
from realforms import SearchBudget, apolar_slice, complex_rank, decompose_from_apolar, parse_form, real_rank

for text in ["x^3 + y^3", "x^3 - 3*x*y^2", "x^4 + y^4", "x^5 + 3*x^2*y^3 - y^5"]:
    f = parse_form(text)
    cert = real_rank(f, SearchBudget(max_candidates=500))
    print(f"{text:24s} complex rank {complex_rank(f)}  real rank in [{cert.real_lower}, {cert.real_upper}]"
          f"  via {cert.method}")
    if cert.witness is not None:
        print(f"{'':24s} witness residual {cert.witness.residual(f):.1e} with {len(cert.witness.terms)} terms")

# x^3 - 3xy^2 is annihilated by x^2 + y^2 (no real roots), so its real rank is 3, not 2
f = parse_form("x^3 - 3*x*y^2")
print("apolar quadrics:", apolar_slice(f, 2))
dec = decompose_from_apolar(f, parse_form("3*x^2*y - y^3"))
for lam, (a, b) in dec.terms:
    print(f"  {lam:+.6f} * ({a:+.6f} x {b:+.6f} y)^3")
