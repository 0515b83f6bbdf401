from __future__ import annotations

from enum import Enum


class TheoremId(str, Enum):
    """Identifiers for every checkable statement."""

    LEHMER = "lehmer"
    GLAISHER = "glaisher"
    BECK_PAIRS = "beck_pairs"
    T1_2 = "t1_2"
    T1_4 = "t1_4"
    T1_6 = "t1_6"
    T1_7 = "t1_7"
    T1_8 = "t1_8"
    T1_9 = "t1_9"
    T1_10 = "t1_10"
    T1_11 = "t1_11"
    T1_12 = "t1_12"
    COR5_2 = "cor5_2"
    COR5_3 = "cor5_3"
    EX1 = "ex1"
    EX2 = "ex2"
    EX3 = "ex3"
    T6_2 = "t6_2"
    T6_3 = "t6_3"
    POSITIVITY = "positivity"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        key = text.strip().lower().replace("-", "_").replace(".", "_")
        aliases = {"t1_1": "lehmer", "remark1_5": "beck_pairs", "beckpairs": "beck_pairs"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown theorem id {text!r}") from None

    def __str__(self) -> str:
        return self.value
