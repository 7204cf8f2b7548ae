"""AST node definitions and the canonical pretty-printer.

Nodes compare structurally (positions are excluded from equality), which is
what the parse -> print -> reparse round-trip tests rely on.  Semantic
annotations (``sem_type``, ``decl``) are attached as plain attributes by the
checker and never participate in equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union


@dataclass(frozen=True)
class Pos:
    line: int
    col: int


def _pos_field():
    return field(default=None, compare=False, repr=False)


@dataclass
class Node:
    pass


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass
class BaseType(Node):
    """Scalar or element type: int/float/.../vertex<T>/edge<T>."""

    name: str                      # canonical lowercase name
    param: Optional[str] = None    # vertex/edge type argument
    pos: Optional[Pos] = _pos_field()


@dataclass
class TupleType(Node):
    fields: list[tuple[str, BaseType]]
    pos: Optional[Pos] = _pos_field()


@dataclass
class AccType(Node):
    """Accumulator type expression.

    kind is one of: sum, min, max, avg, or, and, set, bag, list, map, heap,
    array, groupby, bitwise_or, bitwise_and.  The last four parse but are
    rejected by the semantic checker.
    """

    kind: str
    elem: Optional[Union[BaseType, "AccType", TupleType]] = None
    key: Optional[BaseType] = None                      # map key
    tuple_type: Optional[TupleType] = None              # heap
    capacity: Optional["Expr"] = None                   # heap
    sort_spec: list[tuple[str, str]] = field(default_factory=list)  # heap: (field, ASC|DESC)
    dims: list[Optional["Expr"]] = field(default_factory=list)      # array
    group_keys: list[tuple[BaseType, str]] = field(default_factory=list)  # groupby
    pos: Optional[Pos] = _pos_field()


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------

@dataclass
class Expr(Node):
    pass


@dataclass
class Const(Expr):
    value: object                  # int | float | str | bool | None | datetime
    kind: str                      # int/float/string/bool/null/datetime
    pos: Optional[Pos] = _pos_field()


@dataclass
class VarRef(Expr):
    name: str
    pos: Optional[Pos] = _pos_field()


@dataclass
class AttrRef(Expr):
    var: str
    attr: str
    pos: Optional[Pos] = _pos_field()


@dataclass
class GAccRef(Expr):
    name: str
    primed: bool = False
    pos: Optional[Pos] = _pos_field()


@dataclass
class VAccRef(Expr):
    var: str
    name: str
    primed: bool = False
    pos: Optional[Pos] = _pos_field()


@dataclass
class TypeOf(Expr):
    """``x.type`` — the type name of the bound vertex/edge."""

    var: str
    pos: Optional[Pos] = _pos_field()


@dataclass
class FuncCall(Expr):
    name: str                      # lowercase
    args: list[Expr]
    pos: Optional[Pos] = _pos_field()


@dataclass
class MethodCall(Expr):
    """``v.outdegree(...)`` — built-in method on a bound element."""

    var: str
    name: str
    args: list[Expr]
    pos: Optional[Pos] = _pos_field()


@dataclass
class Unary(Expr):
    op: str                        # '-' | 'not'
    operand: Expr
    pos: Optional[Pos] = _pos_field()


@dataclass
class Binary(Expr):
    op: str    # * / % + - & | = <> < <= > >= and or union intersect minus contains
    left: Expr
    right: Expr
    pos: Optional[Pos] = _pos_field()


@dataclass
class Between(Expr):
    operand: Expr
    low: Expr
    high: Expr
    pos: Optional[Pos] = _pos_field()


@dataclass
class InExpr(Expr):
    operand: Expr
    collection: Expr
    negated: bool = False
    pos: Optional[Pos] = _pos_field()


@dataclass
class LikeExpr(Expr):
    operand: Expr
    pattern: Expr
    negated: bool = False
    pos: Optional[Pos] = _pos_field()


@dataclass
class IsNull(Expr):
    operand: Expr
    negated: bool = False
    pos: Optional[Pos] = _pos_field()


@dataclass
class CaseExpr(Expr):
    subject: Optional[Expr]
    whens: list[tuple[Expr, Expr]]
    default: Optional[Expr]
    pos: Optional[Pos] = _pos_field()


@dataclass
class TupleExpr(Expr):
    items: list[Expr]
    pos: Optional[Pos] = _pos_field()


@dataclass
class ListExpr(Expr):
    items: list[Expr]
    pos: Optional[Pos] = _pos_field()


@dataclass
class MapArrow(Expr):
    """``(k -> v)`` map-accumulator input."""

    keys: list[Expr]
    values: list[Expr]
    pos: Optional[Pos] = _pos_field()


@dataclass
class SeedAll(Expr):
    """``{T.*}`` — all vertices of a type."""

    type_name: str
    pos: Optional[Pos] = _pos_field()


@dataclass
class SeedSet(Expr):
    """``{e1, e2, ...}`` — vertex set from vertex-valued expressions."""

    items: list[Expr]
    pos: Optional[Pos] = _pos_field()


@dataclass
class IndexExpr(Expr):
    """Array-accumulator access; parsed, rejected by the checker."""

    base: Expr
    indexes: list[Expr]
    pos: Optional[Pos] = _pos_field()


# ---------------------------------------------------------------------------
# DARPEs and patterns
# ---------------------------------------------------------------------------

@dataclass
class Darpe(Node):
    pass


@dataclass
class DSymbol(Darpe):
    etype: str
    adorn: str          # '' undirected, '>' forward, '<' backward
    pos: Optional[Pos] = _pos_field()


@dataclass
class DWild(Darpe):
    pos: Optional[Pos] = _pos_field()


@dataclass
class DConcat(Darpe):
    parts: list[Darpe]
    pos: Optional[Pos] = _pos_field()


@dataclass
class DAlt(Darpe):
    parts: list[Darpe]
    pos: Optional[Pos] = _pos_field()


@dataclass
class DStar(Darpe):
    base: Darpe
    low: int = 0
    high: Optional[int] = None      # None = unbounded
    explicit_bounds: bool = False   # printing only
    pos: Optional[Pos] = _pos_field()


@dataclass
class VTest(Node):
    """Vertex test: wildcard, or a disjunction of type / vertex-set names."""

    names: list[str]                # empty list = wildcard '_'
    var: Optional[str] = None
    pos: Optional[Pos] = _pos_field()

    @property
    def is_wild(self) -> bool:
        return not self.names


@dataclass
class Hop(Node):
    darpe: Darpe
    edge_var: Optional[str] = None
    target: VTest = None  # type: ignore[assignment]
    pos: Optional[Pos] = _pos_field()


@dataclass
class PathPattern(Node):
    source: VTest
    hops: list[Hop] = field(default_factory=list)
    pos: Optional[Pos] = _pos_field()


@dataclass
class Pattern(Node):
    paths: list[PathPattern]
    pos: Optional[Pos] = _pos_field()


@dataclass
class RelAtom(Node):
    table: str
    var: str
    pos: Optional[Pos] = _pos_field()


@dataclass
class GraphAtom(Node):
    graph: Optional[str]
    pattern: Pattern
    pos: Optional[Pos] = _pos_field()


Atom = Union[RelAtom, GraphAtom]


# ---------------------------------------------------------------------------
# Statements
# ---------------------------------------------------------------------------

@dataclass
class Stmt(Node):
    pass


@dataclass
class AccDecl(Stmt):
    acc_type: AccType
    entries: list[tuple[str, bool]]   # (name without prefix, is_global)
    init: Optional[Expr] = None
    pos: Optional[Pos] = _pos_field()


@dataclass
class VarDecl(Stmt):
    base_type: Union[BaseType, TupleType]
    name: str
    init: Optional[Expr] = None
    pos: Optional[Pos] = _pos_field()


@dataclass
class Assign(Stmt):
    """``name = expr`` (globals, vertex sets, ACCUM locals)."""

    name: str
    expr: Expr
    pos: Optional[Pos] = _pos_field()


@dataclass
class GAccUpdate(Stmt):
    name: str
    op: str                        # '=' or '+='
    expr: Expr
    pos: Optional[Pos] = _pos_field()


@dataclass
class VAccUpdate(Stmt):
    var: str
    name: str
    op: str
    expr: Expr
    pos: Optional[Pos] = _pos_field()


@dataclass
class IfStmt(Stmt):
    cond: Expr
    then_body: list[Stmt]
    else_body: list[Stmt] = field(default_factory=list)
    pos: Optional[Pos] = _pos_field()


@dataclass
class CaseStmt(Stmt):
    subject: Optional[Expr]
    whens: list[tuple[Expr, list[Stmt]]]
    default: list[Stmt] = field(default_factory=list)
    pos: Optional[Pos] = _pos_field()


@dataclass
class WhileStmt(Stmt):
    cond: Expr
    limit: Optional[Expr]
    body: list[Stmt]
    pos: Optional[Pos] = _pos_field()


@dataclass
class ForeachStmt(Stmt):
    loop_vars: list[str]
    source: Expr                   # collection expr, or Range
    body: list[Stmt]
    pos: Optional[Pos] = _pos_field()


@dataclass
class Range(Expr):
    low: Expr
    high: Expr
    pos: Optional[Pos] = _pos_field()


@dataclass
class BreakStmt(Stmt):
    pos: Optional[Pos] = _pos_field()


@dataclass
class ContinueStmt(Stmt):
    pos: Optional[Pos] = _pos_field()


@dataclass
class OutTable(Node):
    cols: list[tuple[Expr, Optional[str]]]     # (expr, alias)
    into: Optional[str]                        # None for assignment form
    distinct: bool = False
    all_rows: bool = False                     # SELECT ALL x
    pos: Optional[Pos] = _pos_field()


@dataclass
class OrderItem(Node):
    expr: Expr
    desc: bool = False
    explicit_dir: bool = False
    pos: Optional[Pos] = _pos_field()


@dataclass
class QueryBlock(Stmt):
    outputs: list[OutTable]
    atoms: list[Atom]
    where: Optional[Expr] = None
    accum: list[Stmt] = field(default_factory=list)
    post_accum: list[Stmt] = field(default_factory=list)
    group_by: list[list[Expr]] = field(default_factory=list)       # per output
    having: list[Expr] = field(default_factory=list)               # per output
    order_by: list[list[OrderItem]] = field(default_factory=list)  # per output
    limit: list[Expr] = field(default_factory=list)                # per output
    assign_var: Optional[str] = None       # ``S = SELECT ...`` form
    pos: Optional[Pos] = _pos_field()


@dataclass
class WithBlock(Stmt):
    """``WITH <decls> BEGIN <stmts> END`` — standalone accumulator scope."""

    decls: list[Stmt]
    body: list[Stmt]
    pos: Optional[Pos] = _pos_field()


@dataclass
class ReturnStmt(Stmt):
    expr: Expr
    pos: Optional[Pos] = _pos_field()


# ---------------------------------------------------------------------------
# DDL and query definitions
# ---------------------------------------------------------------------------

@dataclass
class AttrSpec(Node):
    name: str
    dtype: str
    is_primary_key: bool = False
    pos: Optional[Pos] = _pos_field()


@dataclass
class CreateVertex(Node):
    name: str
    attrs: list[AttrSpec]
    pos: Optional[Pos] = _pos_field()


@dataclass
class CreateEdge(Node):
    name: str
    directed: bool
    from_type: str
    to_type: str
    attrs: list[AttrSpec]
    discriminators: list[str] = field(default_factory=list)
    reverse_name: Optional[str] = None
    pos: Optional[Pos] = _pos_field()


@dataclass
class CreateGraph(Node):
    name: str
    members: list[str]
    pos: Optional[Pos] = _pos_field()


DdlStmt = Union[CreateVertex, CreateEdge, CreateGraph]


@dataclass
class Param(Node):
    name: str
    ptype: Node                    # BaseType | TupleType | collection BaseType wrapper
    pos: Optional[Pos] = _pos_field()


@dataclass
class CollectionType(Node):
    kind: str                      # set | bag | map
    elem: BaseType
    value: Optional[BaseType] = None
    pos: Optional[Pos] = _pos_field()


@dataclass
class QueryDef(Node):
    name: str
    params: list[Param]
    graph: Optional[str]
    decls: list[Stmt]
    stmts: list[Stmt]
    return_expr: Optional[Expr] = None
    pos: Optional[Pos] = _pos_field()


@dataclass
class Program(Node):
    items: list[Node]              # DdlStmt | QueryDef | Stmt
    pos: Optional[Pos] = _pos_field()


# ---------------------------------------------------------------------------
# Pretty-printer
# ---------------------------------------------------------------------------

_PREC = {
    "or": 1,
    "and": 2,
    # 'not' handled as unary level 3
    "=": 4, "<>": 4, "<": 4, "<=": 4, ">": 4, ">=": 4,
    "between": 4, "in": 4, "like": 4, "is": 4, "contains": 4,
    "union": 5, "intersect": 5, "minus": 5,
    "&": 6, "|": 6,
    "+": 7, "-": 7,
    "*": 8, "/": 8, "%": 8,
}
_ATOM_PREC = 10


def _p(e: Expr, parent_prec: int = 0) -> str:
    s, prec = _print_expr(e)
    if prec < parent_prec:
        return f"({s})"
    return s


def _print_expr(e: Expr) -> tuple[str, int]:
    if isinstance(e, Const):
        if e.kind == "string":
            return "'" + str(e.value).replace("'", "''") + "'", _ATOM_PREC
        if e.kind == "bool":
            return ("true" if e.value else "false"), _ATOM_PREC
        if e.kind == "null":
            return "NULL", _ATOM_PREC
        if e.kind == "datetime":
            return f"DATETIME '{e.value.isoformat(sep=' ')}'", _ATOM_PREC
        return repr(e.value), _ATOM_PREC
    if isinstance(e, VarRef):
        return e.name, _ATOM_PREC
    if isinstance(e, AttrRef):
        return f"{e.var}.{e.attr}", _ATOM_PREC
    if isinstance(e, GAccRef):
        return f"@@{e.name}" + ("'" if e.primed else ""), _ATOM_PREC
    if isinstance(e, VAccRef):
        return f"{e.var}.@{e.name}" + ("'" if e.primed else ""), _ATOM_PREC
    if isinstance(e, TypeOf):
        return f"{e.var}.type", _ATOM_PREC
    if isinstance(e, FuncCall):
        return f"{e.name}({', '.join(_p(a) for a in e.args)})", _ATOM_PREC
    if isinstance(e, MethodCall):
        return f"{e.var}.{e.name}({', '.join(_p(a) for a in e.args)})", _ATOM_PREC
    if isinstance(e, Unary):
        if e.op == "not":
            return f"NOT {_p(e.operand, 3)}", 3
        return f"-{_p(e.operand, 9)}", 9
    if isinstance(e, Binary):
        prec = _PREC[e.op]
        op = e.op.upper() if e.op in ("and", "or", "union", "intersect", "minus", "contains") else e.op
        return f"{_p(e.left, prec)} {op} {_p(e.right, prec + 1)}", prec
    if isinstance(e, Between):
        return f"{_p(e.operand, 5)} BETWEEN {_p(e.low, 5)} AND {_p(e.high, 5)}", 4
    if isinstance(e, InExpr):
        kw = "NOT IN" if e.negated else "IN"
        return f"{_p(e.operand, 5)} {kw} {_p(e.collection, 5)}", 4
    if isinstance(e, LikeExpr):
        kw = "NOT LIKE" if e.negated else "LIKE"
        return f"{_p(e.operand, 5)} {kw} {_p(e.pattern, 5)}", 4
    if isinstance(e, IsNull):
        kw = "IS NOT NULL" if e.negated else "IS NULL"
        return f"{_p(e.operand, 5)} {kw}", 4
    if isinstance(e, CaseExpr):
        parts = ["CASE"]
        if e.subject is not None:
            parts.append(_p(e.subject))
        for cond, val in e.whens:
            parts.append(f"WHEN {_p(cond)} THEN {_p(val)}")
        if e.default is not None:
            parts.append(f"ELSE {_p(e.default)}")
        parts.append("END")
        return " ".join(parts), _ATOM_PREC
    if isinstance(e, TupleExpr):
        return f"({', '.join(_p(i) for i in e.items)})", _ATOM_PREC
    if isinstance(e, ListExpr):
        return f"[{', '.join(_p(i) for i in e.items)}]", _ATOM_PREC
    if isinstance(e, MapArrow):
        k = ", ".join(_p(i) for i in e.keys)
        v = ", ".join(_p(i) for i in e.values)
        return f"({k} -> {v})", _ATOM_PREC
    if isinstance(e, SeedAll):
        return f"{{{e.type_name}.*}}", _ATOM_PREC
    if isinstance(e, SeedSet):
        return f"{{{', '.join(_p(i) for i in e.items)}}}", _ATOM_PREC
    if isinstance(e, Range):
        return f"RANGE({_p(e.low)}, {_p(e.high)})", _ATOM_PREC
    if isinstance(e, IndexExpr):
        idx = "".join(f"[{_p(i)}]" for i in e.indexes)
        return f"{_p(e.base, _ATOM_PREC)}{idx}", _ATOM_PREC
    raise TypeError(f"cannot print expression {e!r}")


def print_darpe(d: Darpe) -> str:
    return _pd(d, 0)


def _pd(d: Darpe, parent: int) -> str:
    # precedence: alt=1, concat=2, star=3
    if isinstance(d, DSymbol):
        if d.adorn == ">":
            return f"{d.etype}>"
        if d.adorn == "<":
            return f"<{d.etype}"
        return d.etype
    if isinstance(d, DWild):
        return "_"
    if isinstance(d, DAlt):
        s = "|".join(_pd(p, 2) for p in d.parts)
        return f"({s})" if parent > 1 else s
    if isinstance(d, DConcat):
        s = ".".join(_pd(p, 3) for p in d.parts)
        return f"({s})" if parent > 2 else s
    if isinstance(d, DStar):
        base = _pd(d.base, 4)
        if not d.explicit_bounds:
            return f"{base}*"
        lo = "" if d.low == 0 else str(d.low)
        hi = "" if d.high is None else str(d.high)
        if d.low == d.high:
            return f"{base}*{d.low}"
        return f"{base}*{lo}..{hi}"
    raise TypeError(f"cannot print darpe {d!r}")


def _print_vtest(vt: VTest) -> str:
    base = "_" if vt.is_wild else "|".join(vt.names)
    return f"{base}:{vt.var}" if vt.var else base


def _print_pattern(p: Pattern) -> str:
    parts = []
    for path in p.paths:
        s = _print_vtest(path.source)
        for hop in path.hops:
            d = print_darpe(hop.darpe)
            if hop.edge_var:
                d = f"{d}:{hop.edge_var}"
            s += f" -({d})- {_print_vtest(hop.target)}"
        parts.append(s)
    return ", ".join(parts)


def _print_atom(a: Atom) -> str:
    if isinstance(a, RelAtom):
        return f"{a.table} AS {a.var}"
    prefix = f"{a.graph} AS " if a.graph else ""
    return prefix + _print_pattern(a.pattern)


def print_base_type(t: Union[BaseType, TupleType, CollectionType]) -> str:
    if isinstance(t, TupleType):
        inner = ", ".join(f"{print_base_type(ft)} {n}" for n, ft in t.fields)
        return f"Tuple<{inner}>"
    if isinstance(t, CollectionType):
        if t.kind == "map":
            return f"map<{print_base_type(t.elem)}, {print_base_type(t.value)}>"
        return f"{t.kind}<{print_base_type(t.elem)}>"
    if t.param:
        return f"{t.name}<{t.param}>"
    return t.name


def print_acc_type(t: AccType) -> str:
    names = {
        "sum": "SumAccum", "min": "MinAccum", "max": "MaxAccum", "avg": "AvgAccum",
        "or": "OrAccum", "and": "AndAccum", "set": "SetAccum", "bag": "BagAccum",
        "list": "ListAccum", "map": "MapAccum", "heap": "HeapAccum",
        "array": "ArrayAccum", "groupby": "GroupByAccum",
        "bitwise_or": "BitwiseOrAccum", "bitwise_and": "BitwiseAndAccum",
    }
    n = names[t.kind]
    if t.kind in ("or", "and", "bitwise_or", "bitwise_and"):
        return n
    if t.kind == "map":
        return f"{n}<{print_base_type(t.key)}, {_print_elem(t.elem)}>"
    if t.kind == "heap":
        spec = ", ".join(f"{f} {d}" for f, d in t.sort_spec)
        return f"{n}<{print_base_type(t.tuple_type)}>({_p(t.capacity)}, {spec})"
    if t.kind == "array":
        dims = "".join("[" + (_p(d) if d else "") + "]" for d in t.dims)
        return f"{n}<{_print_elem(t.elem)}>{dims}"
    if t.kind == "groupby":
        keys = ", ".join(f"{print_base_type(bt)} {nm}" for bt, nm in t.group_keys)
        return f"{n}<{keys}, {_print_elem(t.elem)}>"
    return f"{n}<{_print_elem(t.elem)}>"


def _print_elem(t) -> str:
    if isinstance(t, AccType):
        return print_acc_type(t)
    return print_base_type(t)


class _Printer:
    def __init__(self):
        self.lines: list[str] = []
        self.indent = 0

    def emit(self, s: str):
        self.lines.append("  " * self.indent + s)

    def stmt_list_inline(self, stmts: list[Stmt]) -> str:
        return ", ".join(self.stmt_inline(s) for s in stmts)

    def stmt_inline(self, s: Stmt) -> str:
        if isinstance(s, VarDecl):
            init = f" = {_p(s.init)}" if s.init is not None else ""
            return f"{print_base_type(s.base_type)} {s.name}{init}"
        if isinstance(s, Assign):
            return f"{s.name} = {_p(s.expr)}"
        if isinstance(s, GAccUpdate):
            return f"@@{s.name} {s.op} {_p(s.expr)}"
        if isinstance(s, VAccUpdate):
            return f"{s.var}.@{s.name} {s.op} {_p(s.expr)}"
        if isinstance(s, IfStmt):
            out = f"IF {_p(s.cond)} THEN {self.stmt_list_inline(s.then_body)}"
            if s.else_body:
                out += f" ELSE {self.stmt_list_inline(s.else_body)}"
            return out + " END"
        if isinstance(s, CaseStmt):
            out = "CASE"
            if s.subject is not None:
                out += f" {_p(s.subject)}"
            for cond, body in s.whens:
                out += f" WHEN {_p(cond)} THEN {self.stmt_list_inline(body)}"
            if s.default:
                out += f" ELSE {self.stmt_list_inline(s.default)}"
            return out + " END"
        if isinstance(s, WhileStmt):
            lim = f" LIMIT {_p(s.limit)}" if s.limit is not None else ""
            return f"WHILE {_p(s.cond)}{lim} DO {self.stmt_list_inline(s.body)} END"
        if isinstance(s, ForeachStmt):
            vars_ = s.loop_vars[0] if len(s.loop_vars) == 1 else "(" + ", ".join(s.loop_vars) + ")"
            return f"FOREACH {vars_} IN {_p(s.source)} DO {self.stmt_list_inline(s.body)} END"
        if isinstance(s, BreakStmt):
            return "BREAK"
        if isinstance(s, ContinueStmt):
            return "CONTINUE"
        raise TypeError(f"cannot print inline statement {s!r}")

    def block(self, qb: QueryBlock):
        outs = []
        for o in qb.outputs:
            cols = ", ".join(_p(e) + (f" AS {a}" if a else "") for e, a in o.cols)
            head = ""
            if o.distinct:
                head = "DISTINCT "
            elif o.all_rows:
                head = "ALL "
            into = f" INTO {o.into}" if o.into else ""
            outs.append(head + cols + into)
        prefix = f"{qb.assign_var} = " if qb.assign_var else ""
        self.emit(prefix + "SELECT " + "; ".join(outs))
        self.indent += 1
        self.emit("FROM " + ", ".join(_print_atom(a) for a in qb.atoms))
        if qb.where is not None:
            self.emit(f"WHERE {_p(qb.where)}")
        if qb.accum:
            self.emit(f"ACCUM {self.stmt_list_inline(qb.accum)}")
        if qb.post_accum:
            self.emit(f"POST_ACCUM {self.stmt_list_inline(qb.post_accum)}")
        if qb.group_by:
            self.emit("GROUP BY " + "; ".join(", ".join(_p(e) for e in g) for g in qb.group_by))
        if qb.having:
            self.emit("HAVING " + "; ".join(_p(h) for h in qb.having))
        if qb.order_by:
            rendered = []
            for items in qb.order_by:
                rendered.append(", ".join(
                    _p(i.expr) + ((" DESC" if i.desc else " ASC") if i.explicit_dir else "")
                    for i in items))
            self.emit("ORDER BY " + "; ".join(rendered))
        if qb.limit:
            self.emit("LIMIT " + "; ".join(_p(e) for e in qb.limit))
        self.indent -= 1

    def statement(self, s: Stmt):
        if isinstance(s, QueryBlock):
            self.block(s)
            self.lines[-1] += ";"
            return
        if isinstance(s, AccDecl):
            names = ", ".join(("@@" if g else "@") + n for n, g in s.entries)
            init = f" = {_p(s.init)}" if s.init is not None else ""
            self.emit(f"{print_acc_type(s.acc_type)} {names}{init};")
            return
        if isinstance(s, WithBlock):
            self.emit("WITH")
            self.indent += 1
            for d in s.decls:
                self.statement(d)
            self.indent -= 1
            self.emit("BEGIN")
            self.indent += 1
            for b in s.body:
                self.statement(b)
            self.indent -= 1
            self.emit("END")
            return
        if isinstance(s, ReturnStmt):
            self.emit(f"RETURN {_p(s.expr)};")
            return
        if isinstance(s, IfStmt):
            self.emit(f"IF {_p(s.cond)} THEN")
            self.indent += 1
            for b in s.then_body:
                self.statement(b)
            self.indent -= 1
            if s.else_body:
                self.emit("ELSE")
                self.indent += 1
                for b in s.else_body:
                    self.statement(b)
                self.indent -= 1
            self.emit("END;")
            return
        if isinstance(s, WhileStmt):
            lim = f" LIMIT {_p(s.limit)}" if s.limit is not None else ""
            self.emit(f"WHILE {_p(s.cond)}{lim} DO")
            self.indent += 1
            for b in s.body:
                self.statement(b)
            self.indent -= 1
            self.emit("END;")
            return
        if isinstance(s, ForeachStmt):
            vars_ = s.loop_vars[0] if len(s.loop_vars) == 1 else "(" + ", ".join(s.loop_vars) + ")"
            self.emit(f"FOREACH {vars_} IN {_p(s.source)} DO")
            self.indent += 1
            for b in s.body:
                self.statement(b)
            self.indent -= 1
            self.emit("END;")
            return
        if isinstance(s, CaseStmt):
            self.emit(self.stmt_inline(s) + ";")
            return
        self.emit(self.stmt_inline(s) + ";")

    def ddl(self, d: DdlStmt):
        if isinstance(d, CreateVertex):
            attrs = ", ".join(
                f"{a.name} {a.dtype.upper()}" + (" PRIMARY KEY" if a.is_primary_key else "")
                for a in d.attrs)
            self.emit(f"CREATE VERTEX {d.name} ({attrs})")
            return
        if isinstance(d, CreateEdge):
            kind = "DIRECTED" if d.directed else "UNDIRECTED"
            parts = [f"FROM {d.from_type}", f"TO {d.to_type}"]
            parts += [f"{a.name} {a.dtype.upper()}" for a in d.attrs]
            s = f"CREATE {kind} EDGE {d.name} ({', '.join(parts)})"
            if d.discriminators:
                s += f" DISCRIMINATOR ({', '.join(d.discriminators)})"
            if d.reverse_name:
                s += f" WITH REVERSE EDGE {d.reverse_name}"
            self.emit(s)
            return
        if isinstance(d, CreateGraph):
            self.emit(f"CREATE GRAPH {d.name} ({', '.join(d.members)})")
            return
        raise TypeError(f"cannot print {d!r}")

    def query_def(self, q: QueryDef):
        params = ", ".join(f"{print_base_type(p.ptype)} {p.name}" for p in q.params)
        graph = f" FOR GRAPH {q.graph}" if q.graph else ""
        self.emit(f"CREATE QUERY {q.name} ({params}){graph} {{")
        self.indent += 1
        for d in q.decls:
            self.statement(d)
        for s in q.stmts:
            self.statement(s)
        if q.return_expr is not None:
            self.emit(f"RETURN {_p(q.return_expr)};")
        self.indent -= 1
        self.emit("}")


def to_text(node: Node) -> str:
    """Render a node back to canonical query text."""
    pr = _Printer()
    if isinstance(node, Program):
        for item in node.items:
            to_text_into(item, pr)
    else:
        to_text_into(node, pr)
    return "\n".join(pr.lines)


def to_text_into(node: Node, pr: _Printer):
    if isinstance(node, (CreateVertex, CreateEdge, CreateGraph)):
        pr.ddl(node)
    elif isinstance(node, QueryDef):
        pr.query_def(node)
    elif isinstance(node, Stmt):
        pr.statement(node)
    elif isinstance(node, Expr):
        pr.emit(_p(node))
    else:
        raise TypeError(f"cannot print {node!r}")


def to_json(node) -> object:
    """AST as plain JSON-able data (for the CLI's --ast flag)."""
    if isinstance(node, Node):
        d: dict = {"node": type(node).__name__}
        for name, value in vars(node).items():
            if name in ("pos",) or name.startswith("_"):
                continue
            d[name] = to_json(value)
        return d
    if isinstance(node, (list, tuple)):
        return [to_json(v) for v in node]
    if isinstance(node, dict):
        return {str(k): to_json(v) for k, v in node.items()}
    if hasattr(node, "isoformat"):
        return node.isoformat()
    return node
