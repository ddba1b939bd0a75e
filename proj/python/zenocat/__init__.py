"""Zeno / anti-Zeno control of Schrodinger-cat decoherence: python bindings."""

from ._core import *  # noqa: F401,F403
