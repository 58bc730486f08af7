"""
JINF Custom Exceptions

This module defines the exception hierarchy for the toolkit. Every error
carries a stable error code and a details dictionary holding the witness
(colliding arguments, uncovered values, offending sets) so that a failure
can be replayed from the command line.
"""

from typing import Optional, Dict, Any


class JINFException(Exception):
    """
    Base exception class for all JINF exceptions.

    Attributes:
        message: Human-readable error message
        error_code: Error code for programmatic handling
        details: Additional error details (witnesses)
    """

    def __init__(
        self,
        message: str,
        error_code: str = "JINF_ERROR",
        details: Optional[Dict[str, Any]] = None
    ):
        """
        Initialize exception.

        Args:
            message: Human-readable error message
            error_code: Error code for programmatic handling
            details: Additional error details
        """
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert exception to dictionary for JSON output.

        Returns:
            Dictionary representation of the exception
        """
        return {
            "error": self.error_code,
            "message": self.message,
            "details": self.details,
        }


def _witness(value: Any) -> Any:
    """Render a witness for the details payload (sets become expressions)."""
    render = getattr(value, "render", None)
    if callable(render):
        return render()
    if isinstance(value, (list, tuple)):
        return [_witness(v) for v in value]
    return value


# ---------------------------------------------------------------------------
# Algebra (setalg / perm)
# ---------------------------------------------------------------------------

class AlgebraError(JINFException):
    """Base class for errors raised by the set and permutation algebra."""


class MalformedRepresentation(AlgebraError):
    """
    Exception raised when a raw set or permutation description is not
    structurally well-formed.
    """

    def __init__(self, reason: str, details: Optional[Dict[str, Any]] = None):
        error_details = details or {}
        error_details["reason"] = reason
        super().__init__(
            message=f"Malformed representation: {reason}",
            error_code="MALFORMED_REPRESENTATION",
            details=error_details
        )


class DomainError(AlgebraError):
    """
    Exception raised when an argument lies outside ℕ = {1, 2, 3, ...} or
    outside the window a query-backed permutation answers for.
    """

    def __init__(self, value: int, message: Optional[str] = None):
        if message is None:
            message = f"Argument {value} is outside the domain (positive integers)"
        super().__init__(
            message=message,
            error_code="DOMAIN_ERROR",
            details={"value": value}
        )


class PeriodLimitExceeded(AlgebraError):
    """
    Exception raised when aligning periods would exceed the configured limit.
    """

    def __init__(self, period: int, limit: int):
        super().__init__(
            message=f"Period {period} exceeds the configured limit {limit}",
            error_code="PERIOD_LIMIT_EXCEEDED",
            details={"period": period, "limit": limit}
        )


class NotProperSubset(AlgebraError):
    """
    Exception raised when an orbit is requested for the empty set or ℕ.
    """

    def __init__(self, which: str):
        super().__init__(
            message=f"Set is not a proper nonempty subset of N: {which}",
            error_code="NOT_PROPER_SUBSET",
            details={"set": which}
        )


class NotInfinite(AlgebraError):
    """
    Exception raised when an infinite set is required.
    """

    def __init__(self, subject: Any):
        super().__init__(
            message="Set is finite, an infinite set is required",
            error_code="NOT_INFINITE",
            details={"set": _witness(subject)}
        )


class NotInjective(AlgebraError):
    """
    Exception raised when a permutation description maps two arguments to
    the same value.
    """

    def __init__(self, first: int, second: int, image: int):
        super().__init__(
            message=f"Not injective: s({first}) = s({second}) = {image}",
            error_code="NOT_INJECTIVE",
            details={"first": first, "second": second, "image": image}
        )


class NotSurjective(AlgebraError):
    """
    Exception raised when a permutation description misses a value.
    """

    def __init__(self, value: int):
        super().__init__(
            message=f"Not surjective: {value} has no preimage",
            error_code="NOT_SURJECTIVE",
            details={"value": value}
        )


class ResidueMapNotBijective(AlgebraError):
    """
    Exception raised when the residue map of a permutation description is
    not a permutation of the residues.
    """

    def __init__(self, modulus: int, targets: Any):
        super().__init__(
            message=f"Residue map {list(targets)} is not a bijection modulo {modulus}",
            error_code="RESIDUE_MAP_NOT_BIJECTIVE",
            details={"modulus": modulus, "targets": list(targets)}
        )


class GenerationFailed(AlgebraError):
    """
    Exception raised when random generation exhausts its retries.
    """

    def __init__(self, retries: int, seed: Any):
        super().__init__(
            message=f"No valid permutation generated after {retries} attempts",
            error_code="GENERATION_FAILED",
            details={"retries": retries, "seed": seed}
        )


class InconsistentOracle(AlgebraError):
    """
    Exception raised when a pointwise oracle maps two arguments to the
    same value.
    """

    def __init__(self, first: int, second: int, image: int):
        super().__init__(
            message=f"Oracle is not injective: {first} and {second} both map to {image}",
            error_code="INCONSISTENT_ORACLE",
            details={"first": first, "second": second, "image": image}
        )


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

class GraphError(JINFException):
    """Base class for errors raised by the J∞ / K∞ graph operations."""


class NotBalanced(GraphError):
    """
    Exception raised when a set is not a vertex (finite or cofinite).
    """

    def __init__(self, orbit: str, subject: Any = None):
        details = {"orbit": orbit}
        if subject is not None:
            details["set"] = _witness(subject)
        super().__init__(
            message=f"Set is not balanced: {orbit}",
            error_code="NOT_BALANCED",
            details=details
        )


class DifferentComponents(GraphError):
    """
    Exception raised when two vertices are not in the same component.
    """

    def __init__(self, first: Any, second: Any):
        super().__init__(
            message="Vertices lie in different connected components",
            error_code="DIFFERENT_COMPONENTS",
            details={"x": _witness(first), "y": _witness(second)}
        )


class DuplicateVertices(GraphError):
    """
    Exception raised when a vertex list contains repeated members.
    """

    def __init__(self, vertex: Any):
        super().__init__(
            message="Vertex list contains duplicates",
            error_code="DUPLICATE_VERTICES",
            details={"vertex": _witness(vertex)}
        )


class NotStarOrTop(GraphError):
    """
    Exception raised when pairwise adjacent vertices share neither one
    intersection nor one union.
    """

    def __init__(self, vertices: Any):
        super().__init__(
            message="Clique lies in neither a star nor a top",
            error_code="NOT_STAR_OR_TOP",
            details={"vertices": [_witness(v) for v in vertices]}
        )


class IsSubset(GraphError):
    """
    Exception raised when no Kneser separation witness exists (X ⊆ Y).
    """

    def __init__(self, first: Any, second: Any):
        super().__init__(
            message="X is a subset of Y, no separating vertex exists",
            error_code="IS_SUBSET",
            details={"x": _witness(first), "y": _witness(second)}
        )


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------

class AutomorphismError(JINFException):
    """Base class for errors raised while building or probing automorphisms."""


class OracleFailure(AutomorphismError):
    """
    Exception raised when a black-box automorphism returns something that is
    not a vertex.
    """

    def __init__(self, argument: Any, returned: Any):
        super().__init__(
            message="Oracle returned a value that is not a vertex",
            error_code="ORACLE_FAILURE",
            details={"argument": _witness(argument), "returned": _witness(returned)}
        )


class NotSameComponent(AutomorphismError):
    """
    Exception raised when a construction needs two vertices of one component.
    """

    def __init__(self, first: Any, second: Any):
        super().__init__(
            message="Vertices are not in the same component",
            error_code="NOT_SAME_COMPONENT",
            details={"a": _witness(first), "b": _witness(second)}
        )


class EqualVertices(AutomorphismError):
    """
    Exception raised when a construction needs two distinct vertices.
    """

    def __init__(self, vertex: Any):
        super().__init__(
            message="Vertices must be distinct",
            error_code="EQUAL_VERTICES",
            details={"vertex": _witness(vertex)}
        )


class NotCliquePreserving(AutomorphismError):
    """
    Exception raised when the images of a clique are not a clique of the
    expected kind.
    """

    def __init__(self, reason: str, witness: Any = None):
        details: Dict[str, Any] = {"reason": reason}
        if witness is not None:
            details["witness"] = _witness(witness)
        super().__init__(
            message=f"Map does not preserve cliques: {reason}",
            error_code="NOT_CLIQUE_PRESERVING",
            details=details
        )


class NotSingleton(AutomorphismError):
    """
    Exception raised when a difference of images is not a single element.
    """

    def __init__(self, difference: Any, argument: Optional[int] = None):
        details: Dict[str, Any] = {"difference": _witness(difference)}
        if argument is not None:
            details["n"] = argument
        super().__init__(
            message="Difference of images is not a singleton",
            error_code="NOT_SINGLETON",
            details=details
        )


class NotSingletonIntersection(AutomorphismError):
    """
    Exception raised when f(Y1) ∩ f(Y2) is not a single element.
    """

    def __init__(self, argument: int, size: Optional[int]):
        shown = "infinite" if size is None else size
        super().__init__(
            message=f"Intersection of images for n={argument} has size {shown}",
            error_code="NOT_SINGLETON_INTERSECTION",
            details={"n": argument, "size": shown}
        )


class IntersectionNotVertex(AutomorphismError):
    """
    Exception raised when the intersection of a family is not balanced.
    """

    def __init__(self, orbit: str):
        super().__init__(
            message=f"Intersection of the family is not a vertex: {orbit}",
            error_code="INTERSECTION_NOT_VERTEX",
            details={"orbit": orbit}
        )


class PreconditionViolated(AutomorphismError):
    """
    Exception raised when the inputs of a checker do not satisfy its
    precondition.
    """

    def __init__(self, reason: str):
        super().__init__(
            message=f"Precondition violated: {reason}",
            error_code="PRECONDITION_VIOLATED",
            details={"reason": reason}
        )


# ---------------------------------------------------------------------------
# Finite oracle
# ---------------------------------------------------------------------------

class OracleError(JINFException):
    """Base class for errors raised by the finite ground-truth graphs."""


class BadParameters(OracleError):
    """
    Exception raised when (n, k) are outside the admissible range.
    """

    def __init__(self, family: str, n: int, k: int):
        super().__init__(
            message=f"Bad parameters for {family}: n={n}, k={k}",
            error_code="BAD_PARAMETERS",
            details={"family": family, "n": n, "k": k}
        )


class WindowTooSmall(OracleError):
    """
    Exception raised when a truncation window cannot host the radius.
    """

    def __init__(self, window: int, radius: int):
        super().__init__(
            message=f"Window {window} is too small for radius {radius}",
            error_code="WINDOW_TOO_SMALL",
            details={"window": window, "radius": radius}
        )


class UnknownVertex(OracleError):
    """
    Exception raised when a label is not a vertex of the finite graph.
    """

    def __init__(self, label: Any):
        super().__init__(
            message=f"Unknown vertex: {label}",
            error_code="UNKNOWN_VERTEX",
            details={"label": list(label) if isinstance(label, tuple) else label}
        )


class UnsupportedFamily(OracleError):
    """
    Exception raised when an operation does not apply to a graph family.
    """

    def __init__(self, family: str, operation: str):
        super().__init__(
            message=f"{operation} is not supported for {family} graphs",
            error_code="UNSUPPORTED_FAMILY",
            details={"family": family, "operation": operation}
        )


class BudgetExceeded(OracleError):
    """
    Exception raised when a search exceeds its size or node budget.
    """

    def __init__(self, what: str, used: int, budget: int):
        super().__init__(
            message=f"Budget exceeded: {what} {used} > {budget}",
            error_code="BUDGET_EXCEEDED",
            details={"what": what, "used": used, "budget": budget}
        )


class NotAutomorphism(OracleError):
    """
    Exception raised when a vertex map is not an automorphism.
    """

    def __init__(self, reason: str, witness: Any = None):
        details: Dict[str, Any] = {"reason": reason}
        if witness is not None:
            details["witness"] = witness
        super().__init__(
            message=f"Not an automorphism: {reason}",
            error_code="NOT_AUTOMORPHISM",
            details=details
        )


class NotInducedByPermutation(OracleError):
    """
    Exception raised when a recovered ground permutation fails to induce the
    given automorphism.
    """

    def __init__(self, witness: Any):
        super().__init__(
            message="Automorphism is not induced by the recovered permutation",
            error_code="NOT_INDUCED_BY_PERMUTATION",
            details={"witness": witness}
        )


# ---------------------------------------------------------------------------
# Expression language
# ---------------------------------------------------------------------------

class ExpressionError(JINFException):
    """Base class for errors raised by the set and spec languages."""


class ParseError(ExpressionError):
    """
    Exception raised when text does not match the grammar.

    Attributes:
        line: 1-based line of the offending token
        col: 1-based column of the offending token
        expected: Description of what the parser expected
    """

    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line = line
        self.col = col
        self.expected = expected
        message = f"Parse error at {line}:{col}: expected {expected}"
        if found:
            message += f", found {found!r}"
        super().__init__(
            message=message,
            error_code="PARSE_ERROR",
            details={"line": line, "col": col, "expected": expected, "found": found}
        )


class EvalError(ExpressionError):
    """
    Exception raised when a well-formed expression cannot be evaluated.
    """

    def __init__(self, cause: JINFException):
        self.cause = cause
        super().__init__(
            message=f"Evaluation failed: {cause.message}",
            error_code="EVAL_ERROR",
            details={"cause": cause.to_dict()}
        )


# ---------------------------------------------------------------------------
# Verification suite
# ---------------------------------------------------------------------------

class NoChecksSelected(JINFException):
    """
    Exception raised when a suite filter matches no check name or tag.
    """

    def __init__(self, name_filter: Optional[str]):
        super().__init__(
            message=f"No check matches the filter {name_filter!r}",
            error_code="NO_CHECKS_SELECTED",
            details={"filter": name_filter}
        )
