"""
数值内核模块
"""

from .linalg import as_complex_matrix, kron, economy_svd, frobenius_sq
from .dictionary import (
    GridAngle,
    UnitaryDictionary,
    dft_dictionary,
    steering_vector,
    add_frequencies,
    mirror_frequency,
)

__all__ = [
    'as_complex_matrix', 'kron', 'economy_svd', 'frobenius_sq',
    'GridAngle', 'UnitaryDictionary', 'dft_dictionary', 'steering_vector',
    'add_frequencies', 'mirror_frequency',
]
