from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any


class Verdict(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    PASS_RELATIVE = "PassRelative"
    INCONCLUSIVE = "Inconclusive"
    NOT_APPLICABLE = "NotApplicable"

    @property
    def exit_code(self: Verdict) -> int:
        """0 for the passing verdicts, 1 for Fail, 2 otherwise"""
        if self in (Verdict.PASS, Verdict.PASS_RELATIVE):
            return 0
        if self is Verdict.FAIL:
            return 1
        return 2

    @property
    def passed(self: Verdict) -> bool:
        return self.exit_code == 0


# worst first, used to combine the verdicts of sub-checks
_SEVERITY = [Verdict.FAIL, Verdict.INCONCLUSIVE, Verdict.NOT_APPLICABLE, Verdict.PASS_RELATIVE, Verdict.PASS]


@dataclass(frozen=True)
class CheckReport:
    """The outcome of a check with the data that supports it

    A Fail carries a counterexample that can be rechecked with the module
    APIs. The certificate and counterexample hold plain JSON values only.

    Attributes:
      check: str: The name of the check
      verdict: Verdict: The outcome
      scope: str: What the verdict quantifies over
      certificate: dict[str, Any]: The witness data for the verdict
      counterexample: dict[str, Any] | None: The offending data of a Fail
      seed: int: The seed the randomized steps used
      elapsed_ms: int | None: The running time, only recorded on request
    """
    check: str
    verdict: Verdict
    scope: str = ""
    certificate: dict[str, Any] = field(default_factory=dict)
    counterexample: dict[str, Any] | None = None
    seed: int = 0
    elapsed_ms: int | None = None

    @property
    def exit_code(self: CheckReport) -> int:
        return self.verdict.exit_code

    @property
    def passed(self: CheckReport) -> bool:
        return self.verdict.passed

    def relative_to(self: CheckReport, scope: str) -> CheckReport:
        """The report restated over a declared universe, where Pass becomes PassRelative"""
        verdict = Verdict.PASS_RELATIVE if self.verdict is Verdict.PASS else self.verdict
        return replace(self, verdict=verdict, scope=scope)

    def timed(self: CheckReport, elapsed_ms: int | None) -> CheckReport:
        return replace(self, elapsed_ms=elapsed_ms)

    def to_dict(self: CheckReport) -> dict[str, Any]:
        """Convert the CheckReport to dict

        Returns:
          dict[str, Any]: The report as a dictionary of JSON values
        """
        return json.loads(self.to_json())

    def to_json(self: CheckReport) -> str:
        """Convert the CheckReport to JSON

        Keys are sorted and the indent is fixed, so equal reports give equal
        strings.

        Returns:
          str: The report as a JSON string
        """
        payload = {
            "check": self.check,
            "verdict": self.verdict.value,
            "scope": self.scope,
            "certificate": self.certificate,
            "counterexample": self.counterexample,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self: CheckReport) -> str:
        lines = [f"{self.check}: {self.verdict.value}"]
        if self.scope:
            lines.append(f"  scope: {self.scope}")
        for key, value in sorted(self.certificate.items()):
            lines.append(f"  {key}: {json.dumps(value, sort_keys=True, ensure_ascii=False)}")
        if self.counterexample is not None:
            lines.append(f"  counterexample: {json.dumps(self.counterexample, sort_keys=True, ensure_ascii=False)}")
        lines.append(f"  seed: {self.seed}")
        return "\n".join(lines)


def combine_verdicts(verdicts) -> Verdict:
    """The worst of the verdicts, Pass for none"""
    verdicts = list(verdicts)
    for verdict in _SEVERITY:
        if verdict in verdicts:
            return verdict
    return Verdict.PASS
