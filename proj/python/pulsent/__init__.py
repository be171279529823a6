"""Entanglement dynamics of an initially entangled qubit pair under short laser pulses."""

from ._core import (
    PulseShape,
    PulseSpec,
    PulsentError,
    classify_werner,
    coefficients,
    envelope,
    evolve_state,
    negativity,
    preset_names,
    rk4_oracle,
    run_preset,
    unitary_oracle,
    validate,
)

__all__ = [
    "PulseShape",
    "PulseSpec",
    "PulsentError",
    "classify_werner",
    "coefficients",
    "envelope",
    "evolve_state",
    "negativity",
    "preset_names",
    "rk4_oracle",
    "run_preset",
    "unitary_oracle",
    "validate",
]
