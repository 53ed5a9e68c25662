from .finite import (TruncSimplicialGrp, from_abelian, homotopy_group_finite, nerve,
                     product_simplicial)
from .les import (ChainLes, LesResult, LevelwiseSurjection, chain_les, kernel_object,
                  les_of_surjection)
from .moore import (MooreComplex, dold_kan, dold_kan_map, homotopy, homotopy_data, moore_complex,
                    moore_data, second_projection, simplicial_direct_sum)
from .objects import (ChainComplexAb, HomologyData, IdentityReport, TruncSimplicialAb,
                      chain_homology, check_simplicial_identities, induced_on_homology)
from .tensor import (KunnethReport, homology, kunneth_check, kunneth_formula, kunneth_homology,
                     tensor_complex, tensor_diagonal, tensor_group)

__all__ = [
    "TruncSimplicialGrp", "from_abelian", "homotopy_group_finite", "nerve", "product_simplicial",
    "ChainLes", "chain_les", "LesResult", "LevelwiseSurjection", "kernel_object", "les_of_surjection", "MooreComplex",
    "dold_kan", "dold_kan_map", "homotopy", "homotopy_data", "moore_complex", "moore_data",
    "second_projection", "simplicial_direct_sum", "ChainComplexAb", "HomologyData",
    "IdentityReport", "TruncSimplicialAb", "chain_homology", "check_simplicial_identities",
    "induced_on_homology", "KunnethReport", "homology", "kunneth_check", "kunneth_formula",
    "kunneth_homology", "tensor_complex", "tensor_diagonal", "tensor_group",
]
