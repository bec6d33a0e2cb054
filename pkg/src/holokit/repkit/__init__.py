"""Classical matrix algebras, representation functors and the list catalog."""
from .classical import classical_factor, can, make_classical, FAMILIES, InvalidParameters
from .factors import (Factor, FactorRep, Piece, tensor, direct_sum_linrep, dual, sym_power,
                      ext_power, realify_rep)
from .g2 import make_g2
from .spin import spin_rep, half_spin_rep
from .catalog import (CatalogEntry, ConditionViolated, MetadataOnly, UnknownEntry, CATALOG,
                      get_entry, construct_entry, enumerate_catalog, parse_param, format_param,
                      manifest, space_dim_of)

__all__ = [
    "classical_factor", "can", "make_classical", "FAMILIES", "InvalidParameters", "Factor",
    "FactorRep", "Piece", "tensor", "direct_sum_linrep", "dual", "sym_power", "ext_power",
    "realify_rep", "make_g2", "spin_rep", "half_spin_rep", "CatalogEntry", "ConditionViolated",
    "MetadataOnly", "UnknownEntry", "CATALOG", "get_entry", "construct_entry",
    "enumerate_catalog", "parse_param", "format_param", "manifest", "space_dim_of",
    "apply_functor", "FUNCTORS",
]

FUNCTORS = ("can", "dual", "sym", "ext", "ext3_0", "herm", "antiherm", "spin", "half_spin")


def apply_functor(family: str, functor: str, k: int = 2, **params):
    """The classical algebra ``family`` acting through ``functor``.

    ``sym``/``ext`` take the power ``k``; ``ext3_0`` needs a symplectic family;
    ``herm``/``antiherm`` need ``gl_H`` and act on (anti)hermitian quaternionic forms.
    """
    from . import catalog as c
    if functor in ("herm", "antiherm"):
        if family != "gl_H":
            raise InvalidParameters(f"{functor} is defined over gl(m,H) only")
        f, rep = c._quaternionic_forms(params["m"], symmetric=(functor == "herm"))
    else:
        f = classical_factor(family, **params)
        if functor == "can":
            rep = can(f)
        elif functor == "dual":
            rep = dual(can(f))
        elif functor == "sym":
            rep = sym_power(can(f), k)
        elif functor == "ext":
            rep = ext_power(can(f), k)
        elif functor == "ext3_0":
            if "omega" not in f.meta:
                raise InvalidParameters("Ext^3_0 needs a symplectic factor")
            rep = c._ext3_0(f)
        elif functor == "spin":
            rep = spin_rep(f)
        elif functor == "half_spin":
            rep = half_spin_rep(f)
        else:
            raise InvalidParameters(f"unknown functor {functor!r}; choose from {FUNCTORS}")
    return c._build([f], [tensor((0, rep))])
