from .config_file import RunConfig, parse_config, dump_config
from .main import build_parser, main, run
