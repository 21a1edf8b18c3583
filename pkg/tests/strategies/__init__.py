from .base import (booleans,
                   data,
                   exact_matrices,
                   exact_parameter_vectors,
                   float_matrices,
                   float_parameter_vectors,
                   fractions,
                   interior_exact_parameter_vectors,
                   interior_float_parameter_vectors,
                   invalid_sizes_pairs,
                   non_valid_sizes_pairs,
                   points,
                   polynomials,
                   polynomials_arity,
                   polynomials_pairs,
                   polynomials_triplets,
                   radicals,
                   radicals_lists,
                   radicals_pairs,
                   signs_lists,
                   sizes,
                   sizes_pairs,
                   vertex_matrices)
