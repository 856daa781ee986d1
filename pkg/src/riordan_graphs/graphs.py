"""Labeled graphs built from generating-function data, and their structure.

Vertices are always labeled 1..n.  A Riordan graph G_n(g, f) has an edge
(i, j) with i > j exactly when [z^(i-2)] g*f^(j-1) is odd; the adjacency
matrix is the mod-2 sum of the truncated matrix (zg, f)_n and its
transpose.  Toeplitz graphs are the f = z special case driven by a
distance set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .series import (
    Builtin,
    Gf2Series,
    Mul,
    SeriesExpr,
    Var,
    evaluate,
    mul_trunc,
    parse,
    parity_part,
    shift_down,
    shift_up,
)


class SpecParseError(ValueError):
    """Malformed graph spec mini-language string."""


class ChordalityRangeError(ValueError):
    """Order too small for the chordality characterization to apply."""


class BitGraph:
    """Immutable simple graph on vertices 1..n with bitmask adjacency rows.

    Row i-1 (0-indexed) has bit j-1 set exactly when (i, j) is an edge.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {i + 1} has bits outside 1..{n}")
            if (row >> i) & 1:
                raise ValueError(f"vertex {i + 1} has a loop")
        for i, row in enumerate(rows):
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not (rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i + 1}, {j + 1})")
                r ^= low
        self.n = n
        self.rows = rows

    @classmethod
    def from_edges(cls, n: int, edges) -> BitGraph:
        rows = [0] * n
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise ValueError(f"bad edge ({i}, {j}) for n={n}")
            rows[i - 1] |= 1 << (j - 1)
            rows[j - 1] |= 1 << (i - 1)
        return cls(n, rows)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i - 1] >> (j - 1)) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) with i < j, sorted lexicographically."""
        out = []
        for i in range(self.n):
            r = self.rows[i] >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    out.append((i + 1, j + 1))
                r >>= 1
                j += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, i: int) -> int:
        return self.rows[i - 1].bit_count()

    def induced(self, labels) -> BitGraph:
        """Subgraph induced by the given labels, relabeled 1..k in order."""
        labels = sorted(labels)
        index = {v: k for k, v in enumerate(labels)}
        rows = [0] * len(labels)
        for k, v in enumerate(labels):
            r = self.rows[v - 1]
            while r:
                low = r & -r
                u = low.bit_length()
                if u in index:
                    rows[k] |= 1 << index[u]
                r ^= low
        return BitGraph(len(labels), rows)

    def complement(self) -> BitGraph:
        full = (1 << self.n) - 1
        return BitGraph(
            self.n, tuple((~row & full & ~(1 << i)) for i, row in enumerate(self.rows))
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, BitGraph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"BitGraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class BitMatrix:
    """Immutable 0/1 matrix; row r is an int whose bit c is entry (r, c)."""

    nrows: int
    ncols: int
    row_bits: tuple[int, ...]

    def bit(self, r: int, c: int) -> int:
        return (self.row_bits[r] >> c) & 1

    def is_zero(self) -> bool:
        return not any(self.row_bits)

    def transpose(self) -> BitMatrix:
        cols = [0] * self.ncols
        for r, row in enumerate(self.row_bits):
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= 1 << r
                row ^= low
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    def first_difference(self, other: BitMatrix) -> tuple[int, int] | None:
        """1-indexed (row, col) of the first differing cell, or None."""
        for r in range(self.nrows):
            diff = self.row_bits[r] ^ other.row_bits[r]
            if diff:
                return (r + 1, (diff & -diff).bit_length())
        return None


def graph_to_matrix(graph: BitGraph) -> BitMatrix:
    return BitMatrix(graph.n, graph.n, graph.rows)


@dataclass(frozen=True)
class RiordanSpec:
    """A Riordan graph description: series expressions for g and f, plus n.

    The family tag is derived syntactically: appell when f is the bare
    variable, bell when f is z*g (either factor order), generic otherwise.
    """

    g_expr: SeriesExpr
    f_expr: SeriesExpr
    n: int
    family: str = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.f_expr == Var():
            fam = "appell"
        elif self.f_expr in (Mul(Var(), self.g_expr), Mul(self.g_expr, Var())):
            fam = "bell"
        else:
            fam = "generic"
        object.__setattr__(self, "family", fam)

    @classmethod
    def bell(cls, g_expr: SeriesExpr, n: int) -> RiordanSpec:
        return cls(g_expr, Mul(Var(), g_expr), n)

    @classmethod
    def appell(cls, g_expr: SeriesExpr, n: int) -> RiordanSpec:
        return cls(g_expr, Var(), n)

    def with_n(self, n: int) -> RiordanSpec:
        return replace(self, n=n)


def pascal_spec(n: int) -> RiordanSpec:
    return RiordanSpec.bell(parse("1/(1-z)"), n)


def catalan_spec(n: int) -> RiordanSpec:
    return RiordanSpec.bell(Builtin("catalan"), n)


def motzkin_spec(n: int) -> RiordanSpec:
    return RiordanSpec.bell(Builtin("motzkin"), n)


def _column_series(g: Gf2Series, f: Gf2Series, n: int, cols: int):
    """Yield g*f^(j-1) truncated to n-1 coefficients for j = 1..cols (n >= 2)."""
    order = n - 1
    col = g.truncate(order)
    f = f.truncate(order)
    for j in range(cols):
        if j:
            col = mul_trunc(col, f, order)
        yield col


def riordan_adjacency(g: Gf2Series, f: Gf2Series, n: int) -> tuple[int, ...]:
    """Adjacency rows of G_n(g, f) per the (zg, f)_n + transpose rule."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (0,)
    lower = [0] * n  # lower[i] bit j = [z^(i-2)] g f^(j-1), 0-indexed vertices
    for j, col in enumerate(_column_series(g, f, n, n)):
        bits = col.bits
        for i in range(1, n):  # i is 0-indexed row; exponent i-1 >= 0
            if (bits >> (i - 1)) & 1:
                lower[i] |= 1 << j
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if ((lower[i] >> j) ^ (lower[j] >> i)) & 1:
                rows[i] |= 1 << j
    return tuple(rows)


def build_riordan_from_series(g: Gf2Series, f: Gf2Series, n: int) -> BitGraph:
    return BitGraph(n, riordan_adjacency(g, f, n))


def _series_pair(spec: RiordanSpec, order: int) -> tuple[Gf2Series, Gf2Series]:
    return evaluate(spec.g_expr, order), evaluate(spec.f_expr, order)


def build_riordan(spec: RiordanSpec) -> BitGraph:
    """Build the labeled Riordan graph for the spec.

    A graph on n vertices needs coefficients up to z^(n-2), so both series
    are evaluated at truncation order n.
    """
    order = max(spec.n, 1)
    g, f = _series_pair(spec, order)
    return build_riordan_from_series(g, f, spec.n)


def build_toeplitz(n: int, distances) -> BitGraph:
    """Graph on [n] with an edge (i, j) exactly when |i-j| is a listed distance."""
    ds = tuple(distances)
    if not ds:
        raise ValueError("distance set must be nonempty")
    if list(ds) != sorted(set(ds)):
        raise ValueError(f"distances must be strictly increasing, got {ds}")
    if ds[0] < 1 or ds[-1] > n - 1:
        raise ValueError(f"distances must lie in [1, {n - 1}], got {ds}")
    rows = [0] * n
    for d in ds:
        for i in range(n - d):
            rows[i] |= 1 << (i + d)
            rows[i + d] |= 1 << i
    return BitGraph(n, rows)


def build_delta(n: int, variant: str = "plain") -> BitGraph:
    """The ladder-like graphs: a path 1..n plus one family of rungs.

    plain adds (2i-1, 2i+1) rungs, tilde adds (2i, 2i+2) rungs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    edges = [(i, i + 1) for i in range(1, n)]
    if variant == "plain":
        edges += [(2 * i - 1, 2 * i + 1) for i in range(1, (n - 1) // 2 + 1)]
    elif variant == "tilde":
        edges += [(2 * i, 2 * i + 2) for i in range(1, (n - 2) // 2 + 1)]
    else:
        raise ValueError(f"variant must be 'plain' or 'tilde', got {variant!r}")
    return BitGraph.from_edges(n, edges)


def odd_labels(n: int) -> list[int]:
    return list(range(1, n + 1, 2))


def even_labels(n: int) -> list[int]:
    return list(range(2, n + 1, 2))


@dataclass(frozen=True)
class DecompositionBlocks:
    """X (odd-odd), Y (even-even), B (odd-even) blocks under the
    odd-then-even relabeling, with the permutation that produced them."""

    x: BitMatrix
    y: BitMatrix
    b: BitMatrix
    permutation: tuple[int, ...]

    def reassemble(self) -> BitGraph:
        """Invert the permutation and rebuild the original adjacency."""
        n = len(self.permutation)
        p = self.x.nrows
        pos = {label: k for k, label in enumerate(self.permutation)}

        def block_bit(a: int, b: int) -> int:
            if a < p and b < p:
                return self.x.bit(a, b)
            if a >= p and b >= p:
                return self.y.bit(a - p, b - p)
            if a < p:
                return self.b.bit(a, b - p)
            return self.b.bit(b, a - p)

        rows = [0] * n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j and block_bit(pos[i], pos[j]):
                    rows[i - 1] |= 1 << (j - 1)
        return BitGraph(n, rows)


def _submatrix(graph: BitGraph, row_labels, col_labels) -> BitMatrix:
    rows = []
    for v in row_labels:
        bits = 0
        for c, u in enumerate(col_labels):
            if graph.has_edge(v, u):
                bits |= 1 << c
        rows.append(bits)
    return BitMatrix(len(row_labels), len(col_labels), tuple(rows))


def decompose(graph: BitGraph) -> DecompositionBlocks:
    """Split the adjacency into odd/even blocks by structural relabeling."""
    if graph.n < 2:
        raise ValueError("decomposition needs n >= 2")
    odd = odd_labels(graph.n)
    even = even_labels(graph.n)
    return DecompositionBlocks(
        x=_submatrix(graph, odd, odd),
        y=_submatrix(graph, even, even),
        b=_submatrix(graph, odd, even),
        permutation=tuple(odd + even),
    )


def _rect_riordan(h: Gf2Series, f: Gf2Series, nrows: int, ncols: int) -> BitMatrix:
    """Leading nrows x ncols block of the matrix whose column j has
    generating function h*f^j; entry (i, j) = [z^(i-1)] h f^(j-1)."""
    order = max(nrows, 1)
    col = h.truncate(order)
    rows = [0] * nrows
    for j in range(ncols):
        if j:
            col = mul_trunc(col, f.truncate(order), order)
        bits = col.bits
        for i in range(nrows):
            if (bits >> i) & 1:
                rows[i] |= 1 << j
    return BitMatrix(nrows, ncols, tuple(rows))


def predict_blocks(spec: RiordanSpec) -> DecompositionBlocks:
    """Blocks of the odd/even decomposition computed from g and f alone.

    X comes from (oddPart(g), f) at order ceil(n/2), Y from
    (oddPart(gf/z), f) at order floor(n/2), and B is the mod-2 sum of the
    rectangular blocks (z*oddPart(gf), f) and (evenPart(g), f) transposed.
    Must agree cell-for-cell with decompose(build_riordan(spec)).
    """
    if not is_proper(spec):
        raise ValueError("block prediction requires a proper spec")
    n = spec.n
    if n < 2:
        raise ValueError("block prediction needs n >= 2")
    p = (n + 1) // 2
    q = n // 2
    g, f = _series_pair(spec, n)
    if f.coeff(0):
        raise ValueError("f must have zero constant term")
    gf = mul_trunc(g, f, n)

    g_odd = parity_part(g, "odd")
    g_even = parity_part(g, "even")
    gf_odd = parity_part(gf, "odd")
    y_gen = parity_part(shift_down(gf), "odd")

    x = BitMatrix(p, p, riordan_adjacency(g_odd, f, p))
    y = BitMatrix(q, q, riordan_adjacency(y_gen, f, q))
    m1 = _rect_riordan(shift_up(gf_odd), f, p, q)
    m2t = _rect_riordan(g_even, f, q, p).transpose()
    b = BitMatrix(p, q, tuple(r1 ^ r2 for r1, r2 in zip(m1.row_bits, m2t.row_bits)))
    return DecompositionBlocks(x=x, y=y, b=b, permutation=tuple(odd_labels(n) + even_labels(n)))


def predict_bell_cross_block(spec: RiordanSpec) -> BitMatrix:
    """The B block in its Bell-type form: (zg, zg) plus (evenPart(g), zg)
    transposed.  Only valid when f = z*g."""
    if spec.family != "bell":
        raise ValueError("cross-block form requires a Bell-type spec")
    n = spec.n
    p = (n + 1) // 2
    q = n // 2
    g, f = _series_pair(spec, n)
    zg = shift_up(g).truncate(n)
    m1 = _rect_riordan(zg, f, p, q)
    m2t = _rect_riordan(parity_part(g, "even"), f, q, p).transpose()
    return BitMatrix(p, q, tuple(r1 ^ r2 for r1, r2 in zip(m1.row_bits, m2t.row_bits)))


def is_proper(spec: RiordanSpec) -> bool:
    """True when the constant term of g and the linear term of f are both odd."""
    g, f = _series_pair(spec, 2)
    return bool(g.coeff(0)) and bool(f.coeff(1))


def is_io_decomposable(spec: RiordanSpec) -> bool:
    """Structural io-decomposability check on the built graph.

    Requires the even-labeled block to be empty and the odd-labeled block
    to equal the same construction at order ceil(n/2) under the
    order-preserving relabeling.
    """
    if not is_proper(spec):
        raise ValueError("io-decomposability is defined for proper specs")
    if spec.n == 1:
        return True
    blocks = decompose(build_riordan(spec))
    if not blocks.y.is_zero():
        return False
    half = build_riordan(spec.with_n((spec.n + 1) // 2))
    return blocks.x == graph_to_matrix(half)


def is_chordal_toeplitz(n: int, distances) -> bool:
    """Whether the distance set is an arithmetic progression t, 2t, ..., kt.

    The characterization only applies to orders n >= t_k + t_(k-1) + 1;
    below that a ChordalityRangeError is raised instead of answering.
    """
    ds = tuple(distances)
    if not ds or list(ds) != sorted(set(ds)) or ds[0] < 1:
        raise ValueError(f"bad distance set {ds}")
    t_prev = ds[-2] if len(ds) > 1 else 0
    threshold = ds[-1] + t_prev + 1
    if n < threshold:
        raise ChordalityRangeError(
            f"order {n} is below {threshold}, out of the characterization's range"
        )
    t = ds[0]
    return ds == tuple(t * j for j in range(1, len(ds) + 1))


def connected_components(graph: BitGraph) -> list[tuple[int, ...]]:
    """Connected components as sorted label tuples, ordered by least label."""
    seen = 0
    out = []
    full = (1 << graph.n) - 1
    while seen != full:
        start = (~seen & full) & -(~seen & full)
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            r = frontier
            while r:
                low = r & -r
                nxt |= graph.rows[low.bit_length() - 1]
                r ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        labels = []
        while comp:
            low = comp & -comp
            labels.append(low.bit_length())
            comp ^= low
        out.append(tuple(labels))
    return out


def multipartition(spec: RiordanSpec) -> list[tuple[int, ...]]:
    """The index sets V_1..V_(ceil(log2 n)+1) partitioning [n].

    V_j collects labels 2^(j-1) + 1 + (i-1)*2^j, and the final class is
    {1}.  For an io-decomposable Bell spec every class is independent in
    the built graph; only the label count n is used here.
    """
    n = spec.n
    if n < 2:
        raise ValueError("multipartition needs n >= 2")
    levels = (n - 1).bit_length()  # ceil(log2 n)
    parts = []
    for j in range(1, levels + 1):
        count = (n - 1 + (1 << (j - 1))) >> j
        parts.append(tuple((1 << (j - 1)) + 1 + (i - 1) * (1 << j) for i in range(1, count + 1)))
    parts.append((1,))
    return parts


def has_consecutive_ham_path(graph: BitGraph) -> bool:
    """True when 1 - 2 - ... - n is a path in the graph."""
    return all(graph.has_edge(i, i + 1) for i in range(1, graph.n))


def complement(graph: BitGraph) -> BitGraph:
    return graph.complement()


def export_graph(graph: BitGraph, fmt: str = "json") -> str:
    """Serialize as JSON ({"n", "edges"}) or DOT (undirected, numeric labels)."""
    if fmt == "json":
        return json.dumps({"n": graph.n, "edges": [list(e) for e in graph.edges()]})
    if fmt == "dot":
        lines = ["graph G {"]
        lines += [f"  {v};" for v in range(1, graph.n + 1)]
        lines += [f"  {i} -- {j};" for i, j in graph.edges()]
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"format must be 'json' or 'dot', got {fmt!r}")


# --- graph spec mini-language ---

_FAMILY_KINDS = ("pascal", "catalan", "motzkin")
_SPEC_MAKERS = {"pascal": pascal_spec, "catalan": catalan_spec, "motzkin": motzkin_spec}


@dataclass(frozen=True)
class GraphSpec:
    """A parsed graph spec string: what to build and how."""

    text: str
    kind: str
    n: int
    riordan: RiordanSpec | None = None
    distances: tuple[int, ...] | None = None
    variant: str | None = None

    def build(self) -> BitGraph:
        if self.kind == "toeplitz":
            return build_toeplitz(self.n, self.distances)
        if self.kind in ("delta", "deltaTilde"):
            return build_delta(self.n, self.variant)
        return build_riordan(self.riordan)


def _spec_params(body: str, spec: str) -> dict[str, str]:
    params = {}
    for chunk in body.split(";"):
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        if not sep or not key or not value:
            raise SpecParseError(f"bad parameter {chunk!r} in spec {spec!r}")
        if key in params:
            raise SpecParseError(f"duplicate parameter {key!r} in spec {spec!r}")
        params[key] = value
    return params


def _spec_int(params: dict[str, str], key: str, spec: str) -> int:
    try:
        return int(params.pop(key))
    except KeyError:
        raise SpecParseError(f"spec {spec!r} is missing {key}=") from None
    except ValueError:
        raise SpecParseError(f"{key} must be an integer in spec {spec!r}") from None


def parse_graph_spec(text: str) -> GraphSpec:
    """Parse strings like pascal:n=8, toeplitz:n=6;d=1,2,4, riordan:g=...;f=...;n=...."""
    kind, sep, body = text.partition(":")
    if not sep:
        raise SpecParseError(f"spec {text!r} has no ':'")
    params = _spec_params(body, text)

    if kind in ("riordan", "bell"):
        try:
            g_expr = parse(params.pop("g"))
        except KeyError:
            raise SpecParseError(f"spec {text!r} is missing g=") from None
        if kind == "riordan":
            try:
                f_expr = parse(params.pop("f"))
            except KeyError:
                raise SpecParseError(f"spec {text!r} is missing f=") from None
        n = _spec_int(params, "n", text)
        if params:
            raise SpecParseError(f"unexpected parameters {sorted(params)} in {text!r}")
        if kind == "bell":
            rs = RiordanSpec.bell(g_expr, n)
        else:
            rs = RiordanSpec(g_expr, f_expr, n)
        return GraphSpec(text=text, kind=kind, n=n, riordan=rs)

    if kind in _FAMILY_KINDS:
        n = _spec_int(params, "n", text)
        if params:
            raise SpecParseError(f"unexpected parameters {sorted(params)} in {text!r}")
        return GraphSpec(text=text, kind=kind, n=n, riordan=_SPEC_MAKERS[kind](n))

    if kind == "toeplitz":
        n = _spec_int(params, "n", text)
        try:
            raw = params.pop("d")
        except KeyError:
            raise SpecParseError(f"spec {text!r} is missing d=") from None
        if params:
            raise SpecParseError(f"unexpected parameters {sorted(params)} in {text!r}")
        try:
            distances = tuple(int(x) for x in raw.split(","))
        except ValueError:
            raise SpecParseError(f"d must be comma-separated integers in {text!r}") from None
        if any(d < 1 for d in distances):
            raise SpecParseError(f"distances must be positive in {text!r}")
        g_expr = parse("+".join(f"z^{d - 1}" for d in distances))
        return GraphSpec(
            text=text,
            kind="toeplitz",
            n=n,
            riordan=RiordanSpec.appell(g_expr, n),
            distances=distances,
        )

    if kind in ("delta", "deltaTilde"):
        n = _spec_int(params, "n", text)
        if params:
            raise SpecParseError(f"unexpected parameters {sorted(params)} in {text!r}")
        variant = "plain" if kind == "delta" else "tilde"
        return GraphSpec(text=text, kind=kind, n=n, variant=variant)

    raise SpecParseError(f"unknown spec kind {kind!r}")
