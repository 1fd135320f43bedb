"""Exact generalized continued fractions: convergents, certified digits and
irrationality certificates for tanh(x/y) and e^(x/y)."""

from ._core import (
    CfracError,
    __version__,
    certify,
    digits,
    e_convergents,
    exp_rational,
    gauss_tanh_convergents,
    run_cli,
    tail_index,
    tanh_convergents,
    tanh_rational,
    verify,
)

__all__ = [
    "CfracError",
    "__version__",
    "certify",
    "digits",
    "e_convergents",
    "exp_rational",
    "gauss_tanh_convergents",
    "run_cli",
    "tail_index",
    "tanh_convergents",
    "tanh_rational",
    "verify",
]
