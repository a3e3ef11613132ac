"""Exception types. All derive from :class:`SpecboundError` (a ValueError)."""


class SpecboundError(ValueError):
    pass


class ZeroRowSum(SpecboundError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row + 1} has zero row sum")


class ZeroOffDiagonal(SpecboundError):
    def __init__(self):
        super().__init__("largest off-diagonal entry is 0; the upper curve is defined only at l = 1")


class NoConvergence(SpecboundError):
    def __init__(self, max_iters: int, residual: float):
        self.max_iters = max_iters
        self.residual = residual
        super().__init__(f"power iteration did not converge in {max_iters} iterations "
                         f"(last relative change {residual:.3g})")


class RefusedReducible(SpecboundError):
    def __init__(self):
        super().__init__("equality conditions are only characterized for irreducible matrices")


class NotSymmetric(SpecboundError):
    pass


class MatrixParseError(SpecboundError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class GraphError(SpecboundError):
    pass


class MalformedLine(GraphError):
    def __init__(self, line: int, text: str, why: str = "expected two integers"):
        self.line = line
        super().__init__(f"line {line}: {why}: {text!r}")


class VertexOutOfRange(GraphError):
    def __init__(self, line: int, vertex: int, n: int):
        self.line = line
        self.vertex = vertex
        super().__init__(f"line {line}: vertex {vertex} outside 1..{n}")


class SelfLoop(GraphError):
    def __init__(self, line: int, vertex: int):
        self.line = line
        self.vertex = vertex
        super().__init__(f"line {line}: self-loop at vertex {vertex}")


class DuplicateEdge(GraphError):
    def __init__(self, line: int, u: int, v: int):
        self.line = line
        super().__init__(f"line {line}: duplicate edge {u} {v}")


class IsolatedVertex(GraphError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex + 1} is isolated")


class Disconnected(GraphError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"graph is disconnected: vertex {vertex + 1} is unreachable from vertex 1")


class InvariantViolation(SpecboundError):
    pass
