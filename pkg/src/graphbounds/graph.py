"""Weighted graphs ``(X, b, m)``, energies, paths and the text file format.

A graph is a finite vertex set with a symmetric edge weight ``b`` and a
positive vertex measure ``m``.  Vertex functions are plain numpy arrays
aligned with ``Graph.vertices``; most functions here also accept a mapping
``vertex -> value``.

Graphs are immutable.  Construction is permissive about defects that the
file format can express (nonpositive values, self-loops, asymmetric
duplicates, disconnectedness); those are reported by :func:`validate` and
rejected by every computation through :func:`require_valid`.
"""

from __future__ import annotations

import hashlib
import io
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Mapping, NamedTuple

import numpy as np
from scipy import sparse

Vertex = Hashable


class GraphError(ValueError):
    """Raised for malformed input or a graph that fails validation."""


class GraphFormatError(GraphError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Graph:
    """A finite weighted graph.

    Parameters
    ----------
    vertices : sequence of hashable
        Vertex identifiers.  Their order is the canonical order used for
        every tie-break downstream.
    edges : iterable of ``(x, y, b)`` triples or mapping ``{(x, y): b}``
        Undirected edges.  Listing a pair in both orientations is allowed
        only with equal weights.
    measure : mapping, sequence or scalar, optional
        Vertex measure ``m``.  Defaults to 1 everywhere.
    """

    __slots__ = ("_vertices", "_index", "_edges", "_weights", "_m", "_adj",
                 "_defects", "_laplacian", "_valid")

    def __init__(self, vertices, edges=(), measure=1.0):
        verts = tuple(vertices)
        index = {}
        for v in verts:
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        self._vertices = verts
        self._index = index

        defects = []
        if isinstance(edges, Mapping):
            edges = ((x, y, w) for (x, y), w in edges.items())
        weights = {}
        for x, y, w in edges:
            i, j = self._idx(x), self._idx(y)
            w = float(w)
            if i == j:
                defects.append(f"self-loop at {x!r}")
                continue
            key = (i, j) if i < j else (j, i)
            if key in weights:
                if weights[key] != w:
                    defects.append(f"asymmetric weight between {x!r} and {y!r}")
                continue
            weights[key] = w
        for (i, j), w in weights.items():
            if not w > 0:
                defects.append(
                    f"nonpositive weight {w!r} between {verts[i]!r} and {verts[j]!r}")
        self._weights = weights
        self._edges = tuple(sorted((i, j, w) for (i, j), w in weights.items()))

        if isinstance(measure, Mapping):
            m = np.array([float(measure[v]) for v in verts])
        elif np.ndim(measure) == 0:
            m = np.full(len(verts), float(measure))
        else:
            m = np.asarray(measure, dtype=float).copy()
            if m.shape != (len(verts),):
                raise GraphError("measure length does not match vertex count")
        for v, mv in zip(verts, m):
            if not mv > 0:
                defects.append(f"nonpositive measure {mv!r} at {v!r}")
        m.flags.writeable = False
        self._m = m

        adj = [[] for _ in verts]
        for i, j, w in self._edges:
            if w > 0:
                adj[i].append((j, w))
                adj[j].append((i, w))
        for nbrs in adj:
            nbrs.sort()
        self._adj = tuple(tuple(a) for a in adj)
        if verts and not _connected(self._adj):
            defects.append("disconnected")
        self._defects = tuple(defects)
        self._valid = not defects
        self._laplacian = None

    def _idx(self, x):
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise GraphError(f"unknown vertex {x!r}") from None

    @classmethod
    def from_edges(cls, edges, measure=1.0):
        """Build a graph whose vertex order is the order of first appearance."""
        edges = list(edges)
        seen = {}
        for x, y, _ in edges:
            seen.setdefault(x, None)
            seen.setdefault(y, None)
        return cls(list(seen), edges, measure)

    @property
    def vertices(self):
        return self._vertices

    @property
    def n(self):
        return len(self._vertices)

    @property
    def measure(self):
        """Read-only array of vertex masses in canonical order."""
        return self._m

    @property
    def edges(self):
        """Tuple of ``(i, j, b)`` with vertex indices ``i < j``."""
        return self._edges

    @property
    def adjacency(self):
        """Per-vertex tuples of ``(neighbour index, b)`` sorted by index."""
        return self._adj

    def index(self, x):
        return self._idx(x)

    def indices(self, xs):
        return [self._idx(x) for x in xs]

    def weight(self, x, y):
        i, j = self._idx(x), self._idx(y)
        key = (i, j) if i < j else (j, i)
        return self._weights.get(key, 0.0)

    def __contains__(self, x):
        try:
            return x in self._index
        except TypeError:
            return False

    def __len__(self):
        return len(self._vertices)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={len(self._edges)})"

    def with_measure(self, measure):
        """Return a copy with a different vertex measure."""
        return Graph(self._vertices, ((self._vertices[i], self._vertices[j], w)
                                      for i, j, w in self._edges), measure)

    def induced(self, subset):
        """Induced subgraph on ``subset``; vertex order follows the parent."""
        keep = sorted(set(self.indices(subset)))
        keep_set = set(keep)
        verts = [self._vertices[i] for i in keep]
        edges = [(self._vertices[i], self._vertices[j], w) for i, j, w in self._edges
                 if i in keep_set and j in keep_set]
        return Graph(verts, edges, self._m[keep])

    def laplacian(self):
        """Sparse b-Laplacian ``(A f)(x) = sum_y b(x,y) (f(x) - f(y))``."""
        if self._laplacian is None:
            n = self.n
            if self._edges:
                i, j, w = (np.array(c) for c in zip(*self._edges))
                i = i.astype(int)
                j = j.astype(int)
            else:
                i = j = np.zeros(0, dtype=int)
                w = np.zeros(0)
            off = sparse.coo_matrix((np.concatenate([-w, -w]),
                                     (np.concatenate([i, j]), np.concatenate([j, i]))),
                                    shape=(n, n)).tocsr()
            deg = -np.asarray(off.sum(axis=1)).ravel()
            lap = (off + sparse.diags(deg)).tocsr()
            lap.data.flags.writeable = False
            self._laplacian = lap
        return self._laplacian

    def function(self, values):
        """Convert a mapping or array-like into a vertex-aligned float array."""
        return as_function(self, values)


def _connected(adj):
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j, _ in adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return len(seen) == len(adj)


def as_function(graph, values):
    if isinstance(values, Mapping):
        missing = [v for v in graph.vertices if v not in values]
        if missing:
            raise GraphError(f"function undefined at {missing[0]!r}")
        extra = [v for v in values if v not in graph]
        if extra:
            raise GraphError(f"unknown vertex {extra[0]!r}")
        return np.array([float(values[v]) for v in graph.vertices])
    f = np.asarray(values, dtype=float)
    if f.shape != (graph.n,):
        raise GraphError(f"expected {graph.n} function values, got shape {f.shape}")
    return f


def support(graph, f):
    f = as_function(graph, f)
    return frozenset(v for v, fv in zip(graph.vertices, f) if fv != 0)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(graph):
    """Report every violated graph axiom without raising."""
    return ValidationReport(graph._defects)


def require_valid(graph):
    if not graph._valid:
        raise GraphError("invalid graph: " + "; ".join(graph._defects))
    return graph


@dataclass(frozen=True)
class SubsetSpec:
    """A partition of the vertex set into free vertices and Dirichlet set."""

    omega: frozenset
    dirichlet: frozenset

    @classmethod
    def from_dirichlet(cls, graph, dirichlet):
        d = frozenset(dirichlet)
        graph.indices(d)
        return cls(frozenset(v for v in graph.vertices if v not in d), d)

    @classmethod
    def from_omega(cls, graph, omega):
        o = frozenset(omega)
        graph.indices(o)
        return cls(o, frozenset(v for v in graph.vertices if v not in o))

    def check(self, graph, *, require_nonempty=True):
        if self.omega & self.dirichlet:
            raise GraphError("omega and the Dirichlet set overlap")
        if len(self.omega) + len(self.dirichlet) != graph.n:
            raise GraphError("omega and the Dirichlet set do not cover the vertex set")
        graph.indices(self.omega)
        if require_nonempty:
            if not self.dirichlet:
                raise GraphError("empty Dirichlet set")
            if not self.omega:
                raise GraphError("empty omega")
        return self

    def mask(self, graph):
        """Boolean array, True on omega."""
        out = np.zeros(graph.n, dtype=bool)
        out[graph.indices(self.omega)] = True
        return out


def volume(graph, subset):
    """Total measure of ``subset``."""
    idx = graph.indices(subset)
    return float(graph.measure[idx].sum()) if idx else 0.0


def path_length(graph, path):
    """Sum of reciprocal weights along a path; 0 for a one-vertex path."""
    path = list(path)
    if not path:
        raise GraphError("empty path")
    graph.index(path[0])
    total = 0.0
    for x, y in zip(path, path[1:]):
        w = graph.weight(x, y)
        if not w > 0:
            raise GraphError(f"no edge between {x!r} and {y!r}")
        total += 1.0 / w
    return total


def energy(graph, f):
    """E(f) = 1/2 sum_{x,y} b(x,y) (f(x) - f(y))^2, one term per edge."""
    return energy_bilinear(graph, f, f)


def energy_bilinear(graph, f, g):
    f = as_function(graph, f)
    g = as_function(graph, g)
    if not graph.edges:
        return 0.0
    i, j, w = (np.array(c) for c in zip(*graph.edges))
    i = i.astype(int)
    j = j.astype(int)
    return float(np.sum(w * (f[i] - f[j]) * (g[i] - g[j])))


def norm2(graph, f):
    """Squared l2(X, m) norm."""
    f = as_function(graph, f)
    return float(np.sum(f * f * graph.measure))


def inner(graph, f, g):
    return float(np.sum(as_function(graph, f) * as_function(graph, g) * graph.measure))


# -- file format -------------------------------------------------------------

class Instance(NamedTuple):
    """A graph together with the Dirichlet set declared in its file."""

    graph: Graph
    dirichlet: frozenset


def parse(text):
    """Parse the line-oriented graph format.

    ::

        v <id> <m>
        e <id> <id> <b>
        d <id>

    ``#`` starts a comment line.  Vertex lines fix the canonical order.
    """
    vertices = {}
    edges = []
    seen_pairs = set()
    dirichlet = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "v":
            if len(args) != 2:
                raise GraphFormatError("expected 'v <id> <m>'", lineno)
            if args[0] in vertices:
                raise GraphFormatError(f"duplicate vertex {args[0]!r}", lineno)
            vertices[args[0]] = _number(args[1], lineno)
        elif kind == "e":
            if len(args) != 3:
                raise GraphFormatError("expected 'e <id> <id> <b>'", lineno)
            x, y = args[0], args[1]
            for v in (x, y):
                if v not in vertices:
                    raise GraphFormatError(f"unknown vertex {v!r}", lineno)
            pair = frozenset((x, y))
            if pair in seen_pairs:
                raise GraphFormatError(f"duplicate edge {x!r} {y!r}", lineno)
            seen_pairs.add(pair)
            edges.append((x, y, _number(args[2], lineno)))
        elif kind == "d":
            if len(args) != 1:
                raise GraphFormatError("expected 'd <id>'", lineno)
            if args[0] not in vertices:
                raise GraphFormatError(f"unknown vertex {args[0]!r}", lineno)
            if args[0] not in dirichlet:
                dirichlet.append(args[0])
        else:
            raise GraphFormatError(f"unknown record type {kind!r}", lineno)
    graph = Graph(list(vertices), edges, vertices)
    return Instance(graph, frozenset(dirichlet))


def _number(token, lineno):
    try:
        return float(token)
    except ValueError:
        raise GraphFormatError(f"not a number: {token!r}", lineno) from None


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def format_vertex(v):
    if isinstance(v, tuple):
        s = ",".join(str(c) for c in v)
    else:
        s = str(v)
    if not s or any(c.isspace() for c in s) or s.startswith("#"):
        raise GraphError(f"vertex {v!r} has no whitespace-free text form")
    return s


def dumps(graph, dirichlet=()):
    """Serialize to the text format; floats use ``repr`` so they round-trip."""
    names = [format_vertex(v) for v in graph.vertices]
    if len(set(names)) != len(names):
        raise GraphError("vertex text forms collide")
    out = [f"v {s} {float(mv)!r}" for s, mv in zip(names, graph.measure)]
    out += [f"e {names[i]} {names[j]} {w!r}" for i, j, w in graph.edges]
    d = set(dirichlet)
    out += [f"d {names[i]}" for i, v in enumerate(graph.vertices) if v in d]
    return "\n".join(out) + "\n"


def dump(graph, path, dirichlet=()):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(graph, dirichlet))


def digest(graph, dirichlet=()):
    """SHA-256 of the canonical text form."""
    return hashlib.sha256(dumps(graph, dirichlet).encode("utf-8")).hexdigest()
