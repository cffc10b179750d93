"""Text formats for instances, witnesses, CNF sources and graphs.

Instance::

    c optional comments
    p msat <q> <n> <tau> <d>
    s <m_1>
    1 -2 0
    ...
    s <m_tau>

Literals are 1-based and signed as in DIMACS. Witness: ``tau`` lines of
``n`` characters from ``{0, 1}``. Graph::

    p graph <vertices> <edges>
    e <u> <v>
    part <v> <v> ...        (optional, one line per class)

Serializers emit LF line endings and no trailing whitespace.
"""

from __future__ import annotations

from msat.errors import FormatError, UsageError
from msat.formula import Literal, MultistageInstance, make_clause
from msat.generators import Graph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _ints(tokens, lineno) -> list:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _clause(tokens, lineno, n, q=None) -> tuple:
    values = _ints(tokens, lineno)
    if not values or values[-1] != 0:
        raise FormatError("clause line must end with 0", lineno)
    if 0 in values[:-1]:
        raise FormatError("0 inside a clause", lineno)
    for v in values[:-1]:
        if abs(v) > n:
            raise FormatError(f"literal {v} exceeds variable count {n}", lineno)
    clause = make_clause(Literal.from_dimacs(v) for v in values[:-1])
    if q is not None and len(clause) > q:
        raise FormatError(f"clause of width {len(clause)} exceeds q={q}", lineno)
    return clause


def parse_instance(text: str) -> MultistageInstance:
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise FormatError("missing header 'p msat <q> <n> <tau> <d>'")
    lineno, tokens = header
    if tokens[:2] != ["p", "msat"] or len(tokens) != 6:
        raise FormatError("expected header 'p msat <q> <n> <tau> <d>'", lineno)
    q, n, tau, d = _ints(tokens[2:], lineno)
    if q < 1 or n < 0 or tau < 1 or d < 0:
        raise FormatError("header needs q >= 1, n >= 0, tau >= 1, d >= 0", lineno)
    stages = []
    last = lineno
    for _ in range(tau):
        item = next(lines, None)
        if item is None:
            raise FormatError(f"expected {tau} stages, found {len(stages)}", last)
        lineno, tokens = item
        if tokens[0] != "s" or len(tokens) != 2:
            raise FormatError("expected stage line 's <clause count>'", lineno)
        (count,) = _ints(tokens[1:], lineno)
        if count < 0:
            raise FormatError("negative clause count", lineno)
        clauses = []
        last = lineno
        for _ in range(count):
            item = next(lines, None)
            if item is None:
                raise FormatError(f"stage {len(stages) + 1} truncated: expected {count} clauses",
                                  last)
            lineno, tokens = item
            if tokens[0] == "s":
                raise FormatError(f"stage {len(stages) + 1} truncated: expected {count} clauses",
                                  lineno)
            clauses.append(_clause(tokens, lineno, n, q))
            last = lineno
        stages.append(tuple(clauses))
    extra = next(lines, None)
    if extra is not None:
        raise FormatError("unexpected content after the last stage", extra[0])
    if d > n:
        raise FormatError(f"budget d={d} exceeds n={n}")
    try:
        return MultistageInstance(n, tuple(stages), d, q)
    except UsageError as exc:
        raise FormatError(str(exc)) from None


def serialize_instance(instance: MultistageInstance) -> str:
    out = [f"p msat {instance.q} {instance.n} {instance.tau} {instance.d}"]
    for stage in instance.stages:
        out.append(f"s {len(stage)}")
        for clause in stage:
            out.append(" ".join(str(lit.to_dimacs()) for lit in clause) + (" 0" if clause else "0"))
    return "\n".join(out) + "\n"


def parse_witness(text: str, n: int | None = None, tau: int | None = None) -> tuple:
    if not text:
        rows = []
    else:
        rows = (text[:-1] if text.endswith("\n") else text).split("\n")
    witness = []
    for lineno, row in enumerate(rows, 1):
        row = row.rstrip("\r")
        if set(row) - {"0", "1"}:
            raise FormatError("witness rows may contain only 0 and 1", lineno)
        if n is not None and len(row) != n:
            raise FormatError(f"expected {n} values, got {len(row)}", lineno)
        if witness and len(row) != len(witness[0]):
            raise FormatError("witness rows differ in length", lineno)
        witness.append(tuple(c == "1" for c in row))
    if tau is not None and len(witness) != tau:
        raise FormatError(f"expected {tau} rows, got {len(witness)}")
    return tuple(witness)


def serialize_witness(witness) -> str:
    return "".join("".join("1" if v else "0" for v in f) + "\n" for f in witness)


def parse_cnf(text: str) -> tuple:
    """DIMACS CNF; returns ``(n, clauses)`` with clauses as literal tuples in file order.

    Literals are kept as written (repeats preserved) so exact-width sources
    such as ``x or x or x`` survive.
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None or header[1][:2] != ["p", "cnf"] or len(header[1]) != 4:
        raise FormatError("expected header 'p cnf <vars> <clauses>'",
                          header[0] if header else None)
    n, m = _ints(header[1][2:], header[0])
    clauses = []
    pending = []
    for lineno, tokens in lines:
        for value in _ints(tokens, lineno):
            if value == 0:
                clauses.append(tuple(Literal.from_dimacs(v) for v in pending))
                pending = []
            elif abs(value) > n:
                raise FormatError(f"literal {value} exceeds variable count {n}", lineno)
            else:
                pending.append(value)
    if pending:
        raise FormatError("last clause not terminated by 0")
    if len(clauses) != m:
        raise FormatError(f"header announces {m} clauses, found {len(clauses)}")
    return n, tuple(clauses)


def serialize_cnf(n: int, clauses) -> str:
    out = [f"p cnf {n} {len(clauses)}"]
    for clause in clauses:
        out.append(" ".join(str(lit.to_dimacs()) for lit in clause) + " 0")
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None or header[1][:2] != ["p", "graph"] or len(header[1]) != 4:
        raise FormatError("expected header 'p graph <vertices> <edges>'",
                          header[0] if header else None)
    nv, ne = _ints(header[1][2:], header[0])
    edges = []
    parts = []
    for lineno, tokens in lines:
        if tokens[0] == "e" and len(tokens) == 3:
            u, v = _ints(tokens[1:], lineno)
            if not (1 <= u <= nv and 1 <= v <= nv):
                raise FormatError(f"edge endpoint out of range 1..{nv}", lineno)
            edges.append((u - 1, v - 1))
        elif tokens[0] == "part":
            members = _ints(tokens[1:], lineno)
            if any(not 1 <= v <= nv for v in members):
                raise FormatError(f"partition member out of range 1..{nv}", lineno)
            parts.append(tuple(v - 1 for v in members))
        else:
            raise FormatError(f"unknown line {' '.join(tokens)!r}", lineno)
    if len(edges) != ne:
        raise FormatError(f"header announces {ne} edges, found {len(edges)}")
    try:
        return Graph(nv, tuple(edges), tuple(parts) if parts else None)
    except UsageError as exc:
        raise FormatError(str(exc)) from None


def serialize_graph(graph: Graph) -> str:
    out = [f"p graph {graph.num_vertices} {len(graph.edges)}"]
    out += [f"e {u + 1} {v + 1}" for u, v in graph.edges]
    if graph.parts:
        out += ["part " + " ".join(str(v + 1) for v in part) for part in graph.parts]
    return "\n".join(out) + "\n"
