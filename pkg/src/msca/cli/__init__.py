from .cli_parser import build_parser, run

__all__ = ("build_parser", "run")
