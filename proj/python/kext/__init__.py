"""Exact scalar extension of modules over finite-dimensional algebras."""

from ._kext import (
    Algebra,
    KextError,
    Module,
    are_isomorphic,
    catalog_algebra,
    catalog_module,
    catalog_names,
    catalog_version,
    check_names,
    dual,
    field_names,
    hom_dim,
    run_check,
    split,
    tensor,
)

__all__ = [
    "Algebra",
    "KextError",
    "Module",
    "are_isomorphic",
    "catalog_algebra",
    "catalog_module",
    "catalog_names",
    "catalog_version",
    "check_names",
    "dual",
    "field_names",
    "hom_dim",
    "run_check",
    "split",
    "tensor",
]
