"""
Report - Pass/fail lines collected by the checks and rendered by the CLI
"""
from dataclasses import dataclass, field
from typing import List, Optional


@dataclass(frozen=True)
class ReportLine:
    text: str
    passed: Optional[bool] = None
    detail: str = ''

    def render(self) -> str:
        if self.passed is None:
            return self.text
        prefix = '[OK]' if self.passed else '[FAIL]'
        detail = f" ({self.detail})" if self.detail and not self.passed else ''
        return f"{prefix} {self.text}{detail}"


@dataclass
class Report:
    """Ordered check results; passed unless some line failed"""

    title: str
    lines: List[ReportLine] = field(default_factory=list)

    def add_check(self, text: str, passed: bool, detail: str = '') -> bool:
        self.lines.append(ReportLine(text, bool(passed), detail))
        return bool(passed)

    def add_note(self, text: str):
        self.lines.append(ReportLine(text))

    def extend(self, other: 'Report'):
        self.lines.extend(other.lines)

    @property
    def passed(self) -> bool:
        return all(line.passed is not False for line in self.lines)

    @property
    def failures(self) -> List[ReportLine]:
        return [line for line in self.lines if line.passed is False]

    def render(self) -> str:
        body = "\n".join(line.render() for line in self.lines)
        return f"{self.title}\n{'-' * len(self.title)}\n{body}"
