from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate check; falsy on rejection, with the first problem found."""

    ok: bool
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def accept(cls, message: str = "ok") -> "Verdict":
        return cls(True, message)

    @classmethod
    def reject(cls, message: str) -> "Verdict":
        return cls(False, message)
