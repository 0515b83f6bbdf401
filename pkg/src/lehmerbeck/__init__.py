"""Exact verification of Lehmer's partition identity and its Beck-type companions."""

__version__ = "0.1.0"
