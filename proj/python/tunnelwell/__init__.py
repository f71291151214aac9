"""Tunneling amplitudes for 1-D asymmetric double-well potentials."""

from ._tunnelwell import (  # noqa: F401
    NotDoubleWellError,
    Potential,
    ResonanceRegimeError,
    SpectrumResult,
    TunnelingResult,
    TwoLevelParams,
    WellGeometry,
    ZenoSchedule,
    characterize,
    herring_amplitude,
    mixing_angle,
    p_right,
    phase_integral,
    splitting_exact,
    tunneling_amplitude,
    zeno_probability,
)

__all__ = [
    "NotDoubleWellError",
    "Potential",
    "ResonanceRegimeError",
    "SpectrumResult",
    "TunnelingResult",
    "TwoLevelParams",
    "WellGeometry",
    "ZenoSchedule",
    "characterize",
    "herring_amplitude",
    "mixing_angle",
    "p_right",
    "phase_integral",
    "splitting_exact",
    "tunneling_amplitude",
    "zeno_probability",
]
