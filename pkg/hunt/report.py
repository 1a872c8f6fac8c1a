"""Hunt reports and their text / JSON renderings."""
import hashlib
import json
from dataclasses import dataclass, field
from typing import Dict, List

import pandas as pd

from utils.data_processor import summarize_by


def instance_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class Candidate:
    """A flagged instance, serialized in full, with the verdict of its recheck."""

    index: int
    sample_seed: int
    instance_hash: str
    instance_text: str
    confirmed: bool

    def to_dict(self):
        return {
            "index": self.index,
            "seed": self.sample_seed,
            "hash": self.instance_hash,
            "confirmed": self.confirmed,
            "instance": self.instance_text,
        }


@dataclass
class HuntReport:
    hunt: str
    instances: int
    params: Dict[str, object]
    candidates: List[Candidate] = field(default_factory=list)
    rejected: int = 0
    samples: pd.DataFrame = field(default_factory=pd.DataFrame)

    def to_dict(self):
        return {
            "hunt": self.hunt,
            "instances": self.instances,
            "candidates": len(self.candidates),
            "rejected": self.rejected,
            "params": {key: self.params[key] for key in sorted(self.params)},
            "by_label": summarize_by(self.samples),
            "candidate_list": [c.to_dict() for c in self.candidates],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [
            f"instances={self.instances} candidates={len(self.candidates)} rejected={self.rejected}",
            f"hunt={self.hunt}",
        ]
        lines.extend(f"{key}={self.params[key]}" for key in sorted(self.params))
        lines.extend(f"label {label} {count}" for label, count in summarize_by(self.samples).items())
        for c in self.candidates:
            lines.append(
                f"candidate index={c.index} seed={c.sample_seed} hash={c.instance_hash} "
                f"confirmed={'true' if c.confirmed else 'false'}"
            )
            lines.extend("  " + row for row in c.instance_text.splitlines())
        return "\n".join(lines) + "\n"
