import enum
from typing import Optional

from phaseswitch.config import SimulationConfig
from phaseswitch.exceptions import DomainError


class UnitMode(enum.Enum):
    GAMMA3 = 'gamma3'
    MHZ = 'mhz'

    @classmethod
    def from_name(cls, name: str):
        for mode in cls:
            if mode.value == name.strip().lower():
                return mode
        raise ValueError(f'No UnitMode found for name: {name}')


def mhz_to_gamma3(value_mhz: float, gamma3_mhz: Optional[float] = None) -> float:
    """
    Convert a caption value X (meaning Ω/2π = X MHz) into units of γ₃.

    Args:
        value_mhz (float): Rate or detuning divided by 2π, in MHz.
        gamma3_mhz (float, optional): γ₃/2π in MHz. Defaults to the configured value.

    Returns:
        float: The same quantity in units of γ₃.
    """
    gamma3_mhz = SimulationConfig.get_gamma3_mhz() if gamma3_mhz is None else gamma3_mhz
    if gamma3_mhz <= 0:
        raise DomainError(f'gamma3_mhz must be positive, got {gamma3_mhz}')
    return value_mhz / gamma3_mhz


def gamma3_to_mhz(value: float, gamma3_mhz: Optional[float] = None) -> float:
    gamma3_mhz = SimulationConfig.get_gamma3_mhz() if gamma3_mhz is None else gamma3_mhz
    if gamma3_mhz <= 0:
        raise DomainError(f'gamma3_mhz must be positive, got {gamma3_mhz}')
    return value * gamma3_mhz


def to_gamma3(value: float, mode: UnitMode, gamma3_mhz: Optional[float] = None) -> float:
    if mode is UnitMode.MHZ:
        return mhz_to_gamma3(value, gamma3_mhz)
    return value


def from_gamma3(value: float, mode: UnitMode, gamma3_mhz: Optional[float] = None) -> float:
    if mode is UnitMode.MHZ:
        return gamma3_to_mhz(value, gamma3_mhz)
    return value


__all__ = [
    "UnitMode",
    "mhz_to_gamma3",
    "gamma3_to_mhz",
    "to_gamma3",
    "from_gamma3",
]
