"""Outcome of a theorem or conjecture check."""
from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class Verdict:
    """
    Hypothesis and conclusion status of one check on one instance.

    `margin` is the slack of the binding condition (negative when it fails);
    `binding` names that condition. Theorems are implications, so a verdict
    with a false hypothesis says nothing either way.
    """

    theorem: str
    hypothesis_holds: bool
    conclusion_holds: bool
    witness: Optional[Any] = None
    margin: float = 0.0
    binding: str = ""

    @property
    def is_violation(self) -> bool:
        return self.hypothesis_holds and not self.conclusion_holds

    def to_dict(self):
        witness = self.witness.to_dict() if self.witness is not None else None
        return {
            "theorem": self.theorem,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "margin": self.margin,
            "binding": self.binding,
            "witness": witness,
        }

    def to_text(self) -> str:
        lines = [
            f"theorem={self.theorem}",
            f"hypothesis={'true' if self.hypothesis_holds else 'false'}",
            f"margin={self.margin:g}",
            f"binding={self.binding}",
            f"conclusion={'true' if self.conclusion_holds else 'false'}",
            f"witness={self.witness if self.witness is not None else 'NONE'}",
        ]
        return "\n".join(lines) + "\n"
