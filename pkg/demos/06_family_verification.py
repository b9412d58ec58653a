"""End-to-end verification of the hypersurface family.

For an odd prime p and m >= 4 with p not dividing m (n = 2m + 1), the family

    g = x*y*(x-y)*(x+y-s*y),   e = (x^n, y^n, g),   h = e + (f)

has seven verifiable claims, from (x,y)^(n+2) <= e down to the m-torsion of
A/e being exactly one-dimensional.  `verify_construction` machine-checks all
of them plus a certificate that the explicit n-element generating set of e is
a Groebner basis.
"""

import json

from hkforge.verify import build_construction, verify_construction

data = build_construction(5, 4)
print(f"family at p={data.p}, m={data.m} (n={data.n}):")
print("  g =", data.g)
print("  f =", data.f)
print("  e = (x^9, y^9, g), h = e + (f), b = (x,y)^11")

report = verify_construction(5, 4)
print("\nclaims:")
for claim in report.claims:
    print(f"  [{'ok' if claim.passed else 'FAIL'}] {claim.label}: {claim.detail}")
print("\noverall:", "PASS" if report.ok else "FAIL")

# The JSON form is what the command-line `verify` subcommand prints.
payload = json.loads(report.to_json())
print("\nJSON keys:", sorted(payload))
