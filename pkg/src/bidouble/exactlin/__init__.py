"""Exact rational tensors, contraction and linear algebra."""

from fractions import Fraction

from .kernels import BACKEND
from .linalg import (SIGMA, SIGMA_13, SIGMA_123, SIGMA_132, as_map, compose,
                     coordinates, det, invert, is_antisymmetric, is_symmetric,
                     permute, pivot_columns, rank, solve)
from .tensor import Tensor, concatenate, einsum, to_fraction

Scalar = Fraction
Matrix = Tensor
TensorElement = Tensor
ResidualTensor = Tensor

__all__ = [
    "BACKEND", "Fraction", "Matrix", "ResidualTensor", "SIGMA", "SIGMA_13",
    "SIGMA_123", "SIGMA_132", "Scalar", "Tensor", "TensorElement", "as_map",
    "compose", "concatenate", "coordinates", "det", "einsum", "invert",
    "is_antisymmetric", "is_symmetric", "permute", "pivot_columns", "rank",
    "solve", "to_fraction",
]
