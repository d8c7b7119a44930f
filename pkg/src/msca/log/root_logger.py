import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from platformdirs import user_log_path

from ..utils.common import MAX_LOG_FILES, MAX_LOG_SIZE, PROJECT, PathLike

Logger = logging.Logger


def default_log_file() -> Path:
    return user_log_path(PROJECT) / f"{PROJECT}.log"


class RotateLogHandler(RotatingFileHandler):
    """Rotating file handler keeping the `.log` extension last (`msca.1.log`, `msca.2.log`, ...)."""

    def rotation_filename(self, default_name: PathLike):
        """
        Returns the proper rotated filename for a given log file path.
        Ensures numeric suffix ordering and consistent `.log` extension.
        """

        def clean_suffix(suffix):
            return suffix.removeprefix(".")

        default_name = Path(default_name)
        suffixes = list(map(clean_suffix, default_name.suffixes))

        if not suffixes or not suffixes[-1].isnumeric():
            return default_name
        root = default_name.name.removesuffix("".join(default_name.suffixes))
        return default_name.with_name(f"{root}.{'.'.join(suffixes[::-1])}")

    def doRollover(self):
        # Copied and modified code from `RotatingFileHandler.doRollover`
        if self.stream:
            self.stream.close()
            self.stream = None

        if self.backupCount > 0:
            base_filename = Path(self.baseFilename)

            for i in range(self.backupCount - 1, 0, -1):
                sfn = self.rotation_filename(base_filename.with_suffix(f".{i}.log"))
                dfn = self.rotation_filename(base_filename.with_suffix(f".{i + 1}.log"))

                if sfn.exists():
                    dfn.unlink(missing_ok=True)
                    sfn.rename(dfn)

            dfn = self.rotation_filename(base_filename.with_suffix(".1.log"))
            dfn.unlink(missing_ok=True)

            self.rotate(self.baseFilename, str(dfn))

        if not self.delay:
            self.stream = self._open()


def get_logger(
    stream_only: bool = True,
    include_timestamp: bool = False,
    verbose: bool = False,
    log_file: PathLike | None = None,
) -> Logger:
    """
    Configure the root logger for the command line.

    Messages go to stderr, at DEBUG with `verbose` and INFO otherwise. With
    `stream_only=False` they are also appended to a rotating file, by default
    `msca.log` in the user log directory.
    """
    root_logger = logging.getLogger()

    if root_logger.hasHandlers():
        root_logger.handlers.clear()

    level = logging.DEBUG if verbose else logging.INFO

    fmt = "{}%(message)s".format("" if not include_timestamp else "[%(asctime)s]--")
    formatter = logging.Formatter(
        fmt=fmt,
        datefmt="%Y-%m-%dT%I:%M:%S%p",
    )

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setLevel(level)
    stream_handler.setFormatter(formatter)
    root_logger.addHandler(stream_handler)

    if not stream_only:
        log_path = Path(log_file) if log_file is not None else default_log_file()
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotateLogHandler(
            log_path,
            mode="a",
            encoding="utf-8",
            maxBytes=MAX_LOG_SIZE,
            backupCount=MAX_LOG_FILES,
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter("[%(asctime)s] %(levelname)s %(name)s: %(message)s"))
        root_logger.addHandler(file_handler)

    root_logger.setLevel(logging.DEBUG if verbose or not stream_only else level)

    return root_logger
