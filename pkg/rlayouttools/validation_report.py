'''Validation reports shared by the graph, labeling and geometry checks'''

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple


class ViolationCode(Enum):
    NON_TRIANGULAR_FACE = 'NON_TRIANGULAR_FACE'
    OUTER_NOT_QUAD = 'OUTER_NOT_QUAD'
    CORNER_ORDER = 'CORNER_ORDER'
    SEPARATING_3_CYCLE = 'SEPARATING_3_CYCLE'
    NO_INNER_VERTEX = 'NO_INNER_VERTEX'
    UNLABELED_EDGE = 'UNLABELED_EDGE'
    OUTER_EDGE_LABELED = 'OUTER_EDGE_LABELED'
    UNKNOWN_EDGE = 'UNKNOWN_EDGE'
    CORNER_LABEL = 'CORNER_LABEL'
    BLOCK_ORDER = 'BLOCK_ORDER'
    NOT_TILING = 'NOT_TILING'
    FOUR_WAY_JUNCTION = 'FOUR_WAY_JUNCTION'
    CONTACT_MISMATCH = 'CONTACT_MISMATCH'
    LABEL_MISMATCH = 'LABEL_MISMATCH'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Violation:
    code: ViolationCode
    subject: Tuple[str, ...]
    message: str

    def to_json(self) -> dict:
        return {"code": str(self.code), "subject": list(self.subject), "message": self.message}


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0

    def add(self, code: ViolationCode, subject, message: str) -> None:
        self.violations.append(Violation(code, tuple(subject), message))

    def codes(self) -> List[ViolationCode]:
        return [v.code for v in self.violations]

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}
