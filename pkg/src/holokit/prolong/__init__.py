"""First prolongation, property C and Berger's curvature criteria."""
from .core import (BergerResult, ProlongationResult, SizeCapExceeded, berger_test,
                   first_prolongation, property_C_check, pair_index, triple_index)
from .oracle import dense_dims

__all__ = [
    "ProlongationResult", "BergerResult", "SizeCapExceeded", "first_prolongation",
    "property_C_check", "berger_test", "dense_dims", "pair_index", "triple_index",
]
