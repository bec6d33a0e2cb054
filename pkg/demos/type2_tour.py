"""Type-II constructions: how the coefficients shape the center and the summands."""
from holokit.classify import classify
from holokit.liecore import center_basis, invariant_summands, real_class
from holokit.type2 import Type2Spec, complex_construction, real_construction

SPECS = [
    ("complex", Type2Spec(["I-A:1(m=1)", "I-A:1(m=2)"], lam=["1", "i"])),
    ("real", Type2Spec(["I-A:1(m=1)"], ["GL1R", "I-B:1a(n=2)"], lam=["3/5+4/5i"], mu=["1", "-1"])),
    ("real", Type2Spec(real_factors=["GL1R", "GL1R"], mu=["1", "-1"])),
    ("real", Type2Spec(["I-A:1(m=1)"], lam=["i"])),
]

for kind, spec in SPECS:
    build = complex_construction if kind == "complex" else real_construction
    h = build(spec)
    v = classify(h)
    print(f"{kind} construction {spec.to_dict()}")
    print(f"  space dim {h.space_dim}, dim {h.dim}, center dim {len(center_basis(h))}, "
          f"summands {len(invariant_summands(h))}, class {real_class(h).value}")
    print(f"  classify: {v.overall.value}, " + ", ".join(f"{f.kind}:{f.label}" for f in v.factors))
