"""
JINF Response Models

This module defines Pydantic models for command output and check reports,
ensuring consistent formatting across the CLI and the acceptance suite.
"""

from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional
from datetime import datetime, timezone


class CommandResponse(BaseModel):
    """
    Standard command response model (printed with --json).

    Attributes:
        success: Whether the command succeeded
        command: Subcommand that produced the response
        message: Human-readable message
        data: Result payload (optional)
        error: Error code (optional, present if success is False)
        details: Additional error details (optional)
        timestamp: Response timestamp
    """

    success: bool = Field(description="Whether the command succeeded")
    command: str = Field(default="", description="Subcommand name")
    message: str = Field(description="Human-readable message")
    data: Optional[Any] = Field(default=None, description="Result payload")
    error: Optional[str] = Field(default=None, description="Error code if failed")
    details: Optional[dict] = Field(default=None, description="Additional error details")
    timestamp: datetime = Field(
        default_factory=lambda: datetime.now(timezone.utc),
        description="Response timestamp"
    )

    class Config:
        json_schema_extra = {
            "example": {
                "success": True,
                "command": "dist",
                "message": "3",
                "data": {"distance": 3},
                "timestamp": "2026-01-01T12:00:00Z"
            }
        }

    @classmethod
    def success_response(
        cls,
        command: str,
        message: str,
        data: Any = None
    ) -> "CommandResponse":
        """
        Create a success response.

        Args:
            command: Subcommand name
            message: Text printed in plain mode
            data: Structured result

        Returns:
            CommandResponse instance
        """
        return cls(success=True, command=command, message=message, data=data)

    @classmethod
    def error_response(
        cls,
        command: str,
        message: str,
        error: str,
        details: Optional[dict] = None
    ) -> "CommandResponse":
        """
        Create an error response.

        Args:
            command: Subcommand name
            message: Error message
            error: Error code
            details: Additional error details

        Returns:
            CommandResponse instance
        """
        return cls(
            success=False,
            command=command,
            message=message,
            error=error,
            details=details
        )


class CheckResult(BaseModel):
    """
    Outcome of one acceptance check.

    Attributes:
        name: Check name
        status: "pass", "fail" or "error"
        duration_ms: Wall time in milliseconds
        witness: Witness or error payload
    """

    name: str
    status: str = Field(pattern="^(pass|fail|error)$")
    duration_ms: float = Field(default=0.0, ge=0.0)
    witness: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def line(self) -> str:
        return f"{self.status.upper():5} {self.name} ({self.duration_ms:.1f} ms)"


class SuiteReport(BaseModel):
    """
    Aggregated acceptance-suite outcome.

    Attributes:
        seed: Seed the suite ran with
        filter: Name filter, if any
        checks: One CheckResult per check, sorted by name
        status: "pass" when every check passed, otherwise "fail"
        counts: Number of checks per status
    """

    seed: int
    filter: Optional[str] = None
    checks: List[CheckResult] = Field(default_factory=list)
    status: str = "pass"
    counts: Dict[str, int] = Field(default_factory=dict)

    @classmethod
    def from_checks(
        cls,
        seed: int,
        checks: List[CheckResult],
        filter: Optional[str] = None
    ) -> "SuiteReport":
        """
        Build a report, sorting checks by name and deriving status and counts.

        Args:
            seed: Suite seed
            checks: Check results in any order
            filter: Name filter used for the run

        Returns:
            SuiteReport instance
        """
        ordered = sorted(checks, key=lambda c: c.name)
        counts = {s: sum(1 for c in ordered if c.status == s) for s in ("pass", "fail", "error")}
        status = "pass" if counts["pass"] == len(ordered) else "fail"
        return cls(seed=seed, filter=filter, checks=ordered, status=status, counts=counts)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        for c in self.checks:
            if not c.passed and c.witness:
                lines.append(f"  {c.name}: {c.witness}")
        lines.append(
            f"{self.counts.get('pass', 0)} passed, {self.counts.get('fail', 0)} failed, "
            f"{self.counts.get('error', 0)} errors (seed {self.seed})"
        )
        return "\n".join(lines)


class RestrictionFailure(BaseModel):
    """
    One point where a reconstructed permutation disagrees with an automorphism.

    Attributes:
        vertex: Rendered vertex U
        point: Argument n (None when the vertex itself could not be checked)
        image: σ(n)
        expected: Whether σ(n) should lie in f(U)
        reason: Error text when the check raised
    """

    vertex: str
    point: Optional[int] = None
    image: Optional[int] = None
    expected: Optional[bool] = None
    reason: str = ""


class RestrictionReport(BaseModel):
    """
    Result of comparing f with the action of σ (and optional complement).

    Attributes:
        checked: Number of point checks performed
        vertices: Number of sample vertices
        failures: First failure per failing vertex
    """

    checked: int = 0
    vertices: int = 0
    failures: List[RestrictionFailure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures
