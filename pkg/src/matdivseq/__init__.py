"""Exact determinant divisibility sequences from matrix power maps.

The determinant of the derivative of X -> X^n, taken over the integers
with no rounding anywhere, forms a divisibility sequence in n. This
package computes those sequences by brute force and by a closed form,
verifies the two against each other, and factors the results.
"""

from .factorint import Factorization, factorize, is_prime
from .linalg import (IntMatrix, det_bareiss, jacobian_power_map, kronecker, mat_add,
                     mat_mul, mat_pow, mat_vec, power_map_derivative, vec)
from .polynomials import (MonicIntPolynomial, NotRealizableError, PowerSums, char_poly,
                          discriminant, poly_from_power_sums, power_polynomial,
                          power_sums, resultant, sylvester_matrix)
from .sequences import (PairCheck, RepeatedEigenvalueError, SequenceEntry,
                        VerificationReport, closed_form_entry, discriminant_ratio,
                        generate_sequence, jacobian_determinant, lucas_2x2,
                        verify_closed_form, verify_divisibility)

__version__ = "0.1.0"

__all__ = [
    "Factorization", "factorize", "is_prime",
    "IntMatrix", "det_bareiss", "jacobian_power_map", "kronecker", "mat_add",
    "mat_mul", "mat_pow", "mat_vec", "power_map_derivative", "vec",
    "MonicIntPolynomial", "NotRealizableError", "PowerSums", "char_poly",
    "discriminant", "poly_from_power_sums", "power_polynomial", "power_sums",
    "resultant", "sylvester_matrix",
    "PairCheck", "RepeatedEigenvalueError", "SequenceEntry", "VerificationReport",
    "closed_form_entry", "discriminant_ratio", "generate_sequence",
    "jacobian_determinant", "lucas_2x2", "verify_closed_form", "verify_divisibility",
    "__version__",
]
