"""Generalized-statistics Fock space toolkit."""

from ._core import (
    Error,
    InputError,
    adjoint,
    annihilation,
    boltzmann,
    boson,
    check_braid_relation,
    check_consistency,
    check_yang_baxter,
    color,
    creation,
    fermion,
    flip,
    gram,
    kron,
    operator_norm,
    place,
    quon,
    quotient_dims,
    report,
    run_cli,
    tilde,
    untilde,
    verify_adjointness,
    verify_crel,
)

__all__ = [
    "Error",
    "InputError",
    "adjoint",
    "annihilation",
    "boltzmann",
    "boson",
    "check_braid_relation",
    "check_consistency",
    "check_yang_baxter",
    "color",
    "creation",
    "fermion",
    "flip",
    "gram",
    "kron",
    "operator_norm",
    "place",
    "quon",
    "quotient_dims",
    "report",
    "run_cli",
    "tilde",
    "untilde",
    "verify_adjointness",
    "verify_crel",
]
