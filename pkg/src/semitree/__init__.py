"""Exhaustive exploration of the tree of numerical semigroups."""

from .core import (
    TRIVIAL,
    Semigroup,
    canonical_string,
    contains,
    d_set,
    from_gaps,
    from_generators,
    is_generator_above_conductor,
    lambda_,
    lambda_index,
    minimal_generators,
    nu,
    parse,
    to_record,
)
from .tree import (
    Kind,
    Strength,
    TreeNode,
    children,
    classify,
    classify_ordinary,
    effective_generators,
    parent,
    walk,
)

__version__ = "0.1.0"
