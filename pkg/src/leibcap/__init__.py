"""Exact non-abelian tensor/exterior squares and capability of Leibniz algebras."""

__version__ = "0.1.0"

from .exactfield import GF, QQ, Field  # noqa: E402
from .algebra import (LeibnizAlgebra, LeibnizIdentityViolation, abelianization, center,  # noqa: E402
                      commutator, direct_product, from_brackets, ideal, is_lie, is_perfect,
                      liezation, validate)
from .tensor import (exterior_center, exterior_pair, exterior_square, is_capable,  # noqa: E402
                     multiplier, nabla, tensor_center, tensor_pair, tensor_square, theta)
from .lie import lie_exterior_center, lie_exterior_square, lie_is_capable  # noqa: E402
from .catalog import catalog_get, catalog_list  # noqa: E402
