from ._version import __version__, __version_info__

__author__ = "msca-synth maintainers"
__license__ = "Apache-2.0"


__all__ = (
    "__version__",
    "__version_info__",
    "__author__",
    "__license__",
)
