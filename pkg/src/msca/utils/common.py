from os import PathLike as _PathLike
from typing import Iterable, Union

PathLike = Union[str, _PathLike]

PROJECT = "msca"

# Label element encoding shared by the JSON codec, DOT export and the CLI.
IDLE_TOKEN = "-"
REQUEST_PREFIX = "?"
OFFER_PREFIX = "!"

# Modality glyphs appended to rendered labels.
NECESSARY_GLYPH = "□"
PERMITTED_GLYPH = "◇"

# Brute-force maximality check refuses automata with more transitions than this.
MAXIMALITY_TRANSITION_LIMIT = 200

# Rotating file log: size per file and number of kept backups.
MAX_LOG_SIZE = 10_000_000  # 10 MB
MAX_LOG_FILES = 5

# Annotation node drawn for an empty controller.
EMPTY_NODE = "EMPTY"

# Separators for state vectors given on the command line.
STATE_SEPARATOR = ";"
LABEL_SEPARATOR = ","

ORCHESTRATION_FIXTURES = ("client", "broker", "hotel", "privileged_hotel")
CHOREOGRAPHY_FIXTURES = ("client", "privileged_client", "broker", "hotel")


def type_name(obj: object) -> str:
    """
    Return a clean, human-readable type name for debugging or logs.
    Handles both instances and classes safely, falling back to qualified names if necessary.
    """
    if not isinstance(obj, type):
        obj = type(obj)

    def _gattr(n):
        return getattr(obj, n, None)

    return _gattr("__name__") or _gattr("__qualname__") or repr(obj)


def join_labels(labels: Iterable[str], sep: str = LABEL_SEPARATOR) -> str:
    return sep.join(labels)


def split_labels(text: str, sep: str = LABEL_SEPARATOR) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(sep))


def elapsed_ms(start: float, stop: float) -> str:
    return f"{(stop - start) * 1000:.1f} ms"
