import os

from dotenv import load_dotenv, find_dotenv

load_dotenv(find_dotenv())


def _flag(name: str, default: str = 'false') -> bool:
    return os.environ.get(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


class SimulationConfig:

    @staticmethod
    def get_gamma3_mhz() -> float:
        """γ₃/2π in MHz, used to convert caption values into γ₃ units."""
        return float(os.environ.get('PHASESWITCH_GAMMA3_MHZ', '5.4'))

    @staticmethod
    def get_workers() -> int:
        return max(1, int(os.environ.get('PHASESWITCH_WORKERS', '1')))

    @staticmethod
    def get_strict_config() -> bool:
        return _flag('PHASESWITCH_STRICT_CONFIG')


class LogConfig:

    @staticmethod
    def get_log_file():
        return os.environ.get('PHASESWITCH_LOG_FILE') or None

    @staticmethod
    def get_debug() -> bool:
        return _flag('PHASESWITCH_DEBUG')


__all__ = [
    "SimulationConfig",
    "LogConfig",
]
