"""Structure theory for linear Lie algebras over R."""
from .linrep import (
    LinRep, NotTotallyReducible, NotReductive, Undetermined, NotClosed,
    lie_closure, independent_subset, direct_product, random_conjugator, inverse,
)
from .structure import (
    ReductiveSplit, center, center_basis, derived_and_split, commutant, commutant_basis,
    trace_gram, signature, is_reductive, centralizer_in,
)
from .modules import Summand, irreducible_summands, invariant_summands, restrict, schur_type
from .realclass import (
    RealClass, intertwiners, decompose_direct_product, real_class, has_complex_structure,
    complexify_alg, SPartial, property_S_partial,
)
