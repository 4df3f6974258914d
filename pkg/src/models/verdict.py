from enum import Enum


class Verdict(str, Enum):
    """Binary decision; abnormal is the positive class everywhere downstream."""

    NORMAL = "normal"
    ABNORMAL = "abnormal"

    @classmethod
    def from_flag(cls, abnormal: bool) -> "Verdict":
        return cls.ABNORMAL if abnormal else cls.NORMAL

    @property
    def is_abnormal(self) -> bool:
        return self is Verdict.ABNORMAL
