"""A walk through a few catalog rows: models, real class, prolongation, Berger."""
from holokit.liecore import real_class
from holokit.prolong import berger_test, first_prolongation
from holokit.repkit import construct_entry

ROWS = [
    ("I-A:1", {"m": 2}),             # gl(2,C) on C^2
    ("I-B:2a", {"p": 2, "q": 1}),    # R + so(2,1) on R^3
    ("III-A:2", {"m": 2, "lam": "1i"}),
    ("III-C:2b", {"m": 2, "theta": "3/5,4/5"}),
    ("V-B:1b", {}),                  # compact G2 on R^7
]

for lid, params in ROWS:
    h = construct_entry(lid, params)
    pr = first_prolongation(h)
    b = berger_test(h)
    print(f"{h.name}")
    print(f"  space dim {h.space_dim}, algebra dim {h.dim}, real class {real_class(h).value}")
    print(f"  dim h^(1) = {pr.dim_h1}, property C: {pr.property_C}")
    print(f"  dim K(h) = {b.dim_K}, Berger first criterion: {b.first_criterion}")
