"""Frobenius star-algebra verification: group algebras, characters, twisted
orthogonality. Thin wrapper over the compiled core."""

from ._core import (
    Group,
    character_gram,
    character_table,
    check_axioms,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    group_from_cayley,
    group_from_permutations,
    twisted,
)

__all__ = [
    "Group",
    "character_gram",
    "character_table",
    "check_axioms",
    "cyclic",
    "dicyclic",
    "dihedral",
    "direct_product",
    "group_from_cayley",
    "group_from_permutations",
    "twisted",
]
