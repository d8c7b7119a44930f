from .root_logger import Logger, RotateLogHandler, default_log_file, get_logger

__all__ = ("Logger", "RotateLogHandler", "default_log_file", "get_logger")
