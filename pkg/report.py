# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: Check reports, invariant errors and the exact text forms shared by every module

from dataclasses import dataclass, field
from fractions import Fraction


class InvariantViolation(ArithmeticError):
    """Raised when an exact computation produces a value that signals a bug."""


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def parse_rational(text):
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError("not an exact rational: {!r}".format(text))


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    lines: list = field(default_factory=list)
    diffs: list = field(default_factory=list)

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def note(self, line):
        self.lines.append(line)
        return self

    def fail(self, line, **diff):
        self.passed = False
        self.lines.append(line)
        if diff:
            self.diffs.append({k: _jsonable(v) for k, v in diff.items()})
        return self

    def expect(self, condition, line, **diff):
        # records line either way, flips the verdict when condition is false
        if condition:
            return self.note(line)
        return self.fail(line, **diff)

    def merge(self, other):
        self.passed = self.passed and other.passed
        self.lines.extend("[{}] {}".format(other.name, line) for line in other.lines)
        self.diffs.extend(dict(d, check=other.name) for d in other.diffs)
        return self

    def to_dict(self):
        return {
            "check": self.name,
            "verdict": self.verdict,
            "lines": list(self.lines),
            "diffs": list(self.diffs),
        }

    def render(self):
        out = ["{}: {}".format(self.name, self.verdict)]
        out.extend("  " + line for line in self.lines)
        return "\n".join(out)


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value
