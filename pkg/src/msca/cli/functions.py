from argparse import ArgumentDefaultsHelpFormatter, ArgumentTypeError, RawTextHelpFormatter
from functools import partial

from ..models._dataclasses import SerializedNamespace
from ..utils.common import LABEL_SEPARATOR, STATE_SEPARATOR, split_labels


class CliFormatter(RawTextHelpFormatter, ArgumentDefaultsHelpFormatter):
    pass


def store_true(func, *args, **kwargs):
    kwargs["action"] = kwargs.pop("action", "store_true")
    return partial(func, *args, **kwargs)


def has_flag(parsed_arg, attr):
    return getattr(parsed_arg, attr, None)


def state_list(text: str) -> frozenset[tuple[str, ...]]:
    """`c0,b1;c1,b2` -> {("c0", "b1"), ("c1", "b2")}."""
    states = set()
    for chunk in text.split(STATE_SEPARATOR):
        if not chunk.strip():
            continue
        labels = split_labels(chunk, LABEL_SEPARATOR)
        if not all(labels):
            raise ArgumentTypeError(f"empty label in state {chunk!r}")
        states.add(labels)
    if not states:
        raise ArgumentTypeError("expected at least one state")
    return frozenset(states)


def get_metadata():
    from ..utils.metadata import (
        __author__,
        __license__,
        __version__,
    )

    return SerializedNamespace(module="Metadata", author=__author__, license=__license__, version=__version__)
