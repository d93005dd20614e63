"""Traceability graph, metadata/type filters, and textual view rendering.

The graph is derived purely from the model and is rebuildable at any
time; it carries no independent state.  Edge direction encodes "serves"
semantics so that backward reachability from a concern collects every
element that ultimately supports it:

    typedBy     usage -> its definition
    subsets     usage -> subsetted element; for an actor inside a use
                case the edge is hoisted to occurrence -> use case, and
                for a stakeholder inside a concern to occurrence -> concern
    redefines   usage -> redefined feature
    subjectOf   use case -> its subject target, and subject target -> concern
    objectiveOf referenced requirement -> use case
    frames      viewpoint -> concern; an objective's frame is hoisted
                to use case -> concern
    satisfies   view -> viewpoint
    exposes     view -> exposed element
    refines     requirement -> refined requirement
    binds       bound usage -> bound element
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownElement, UnknownMetadataDef, UnknownType
from .exprs import Expr
from .sysml_ast import (
    Element,
    ElementKind,
    FAnd,
    FHasMeta,
    FKind,
    FMetaEq,
    FNot,
    FOr,
    FTyped,
    FilterExpr,
    ModelIndex,
    QName,
    RelKind,
    qname,
    qname_text,
)

EDGE_KINDS = frozenset(
    {
        "frames",
        "satisfies",
        "subsets",
        "redefines",
        "typedBy",
        "objectiveOf",
        "performs",
        "subjectOf",
        "refines",
        "exposes",
        "binds",
    }
)


@dataclass(frozen=True)
class TraceEdge:
    source: QName
    target: QName
    kind: str


@dataclass(frozen=True)
class TraceGraph:
    nodes: tuple[QName, ...]
    edges: tuple[TraceEdge, ...]

    def forward(self) -> dict[QName, list[TraceEdge]]:
        index: dict[QName, list[TraceEdge]] = {node: [] for node in self.nodes}
        for edge in self.edges:
            index[edge.source].append(edge)
        return index

    def backward(self) -> dict[QName, list[TraceEdge]]:
        index: dict[QName, list[TraceEdge]] = {node: [] for node in self.nodes}
        for edge in self.edges:
            index[edge.target].append(edge)
        return index


def build_graph(model: Element) -> TraceGraph:
    """One node per element, one edge per relationship instance."""
    index = ModelIndex(model)
    nodes = tuple(path for _, path in index.pairs)
    node_set = set(nodes)
    edges: list[TraceEdge] = []

    def add(source: QName | None, target: QName | None, kind: str) -> None:
        if source in node_set and target in node_set:
            edges.append(TraceEdge(source, target, kind))

    def target_path(element: Element, target: QName) -> QName | None:
        resolved = index.resolve_target(element, target)
        return index.path_of.get(id(resolved)) if resolved is not None else None

    def enclosing(path: QName, kinds: frozenset[ElementKind]) -> QName | None:
        for cut in range(len(path) - 1, 0, -1):
            prefix = path[:cut]
            owner = index.by_path.get(prefix)
            if owner is not None and owner.kind in kinds:
                return prefix
        return None

    use_cases = frozenset({ElementKind.USE_CASE, ElementKind.USE_CASE_DEF})
    concerns = frozenset({ElementKind.CONCERN, ElementKind.CONCERN_DEF})

    for element, path in index.pairs:
        in_objective = element.kind is ElementKind.REQUIREMENT and element.is_objective
        ucase_path = enclosing(path, use_cases)
        concern_path = enclosing(path, concerns)

        for rel in element.relationships:
            resolved = target_path(element, rel.target)
            if rel.kind is RelKind.TYPING:
                add(path, resolved, "typedBy")
            elif rel.kind is RelKind.REDEFINES:
                add(path, resolved, "redefines")
            elif rel.kind is RelKind.REFINES:
                add(path, resolved, "refines")
            elif rel.kind is RelKind.SATISFIES:
                add(path, resolved, "satisfies")
            elif rel.kind is RelKind.EXPOSES:
                add(path, resolved, "exposes")
            elif rel.kind is RelKind.BINDING:
                add(path, resolved, "binds")
            elif rel.kind is RelKind.REFERENCES:
                if in_objective and ucase_path is not None:
                    add(resolved, ucase_path, "objectiveOf")
            elif rel.kind is RelKind.FRAMES:
                if in_objective and ucase_path is not None:
                    add(ucase_path, resolved, "frames")
                else:
                    add(path, resolved, "frames")
            elif rel.kind is RelKind.SUBSETS:
                if element.kind is ElementKind.ACTOR and ucase_path is not None:
                    add(resolved, ucase_path, "subsets")
                elif element.kind is ElementKind.STAKEHOLDER and concern_path is not None:
                    add(resolved, concern_path, "subsets")
                elif element.kind is ElementKind.SUBJECT and ucase_path is not None:
                    add(ucase_path, resolved, "subjectOf")
                elif element.kind is ElementKind.SUBJECT and concern_path is not None:
                    add(resolved, concern_path, "subjectOf")
                else:
                    add(path, resolved, "subsets")

        if element.performer is not None:
            resolved = index.resolve_target(element, element.performer)
            if resolved is not None and resolved.kind is ElementKind.ACTOR:
                # Trace through the local actor usage to the occurrence.
                for rel in resolved.rels(RelKind.SUBSETS):
                    occurrence = index.resolve_target(resolved, rel.target)
                    if occurrence is not None:
                        add(path, index.path_of.get(id(occurrence)), "performs")
                        break
                else:
                    add(path, index.path_of.get(id(resolved)), "performs")
            elif resolved is not None:
                add(path, index.path_of.get(id(resolved)), "performs")

    return TraceGraph(nodes, tuple(edges))


def reach(
    graph: TraceGraph,
    start: QName | str,
    direction: str = "forward",
    kinds: frozenset[str] | None = None,
) -> set[QName]:
    """Transitive closure along permitted edge kinds; includes `start`."""
    if direction not in ("forward", "backward"):
        raise ValueError(f"direction must be forward or backward, not {direction!r}")
    path = qname(start) if isinstance(start, str) else start
    node_set = set(graph.nodes)
    if path not in node_set:
        prefix = path[:-1]
        while prefix and prefix not in node_set:
            prefix = prefix[:-1]
        raise UnknownElement(qname_text(path), qname_text(prefix))
    adjacency = graph.forward() if direction == "forward" else graph.backward()
    seen = {path}
    frontier = [path]
    while frontier:
        current = frontier.pop()
        for edge in adjacency[current]:
            if kinds is not None and edge.kind not in kinds:
                continue
            nxt = edge.target if direction == "forward" else edge.source
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


# ---------------------------------------------------------------------------
# Filters


def evaluate_filter(model: Element, expr: FilterExpr) -> set[QName]:
    """Paths of exactly the elements satisfying `expr`.

    Metadata tags are inherited through typing chains.  Raises
    UnknownMetadataDef / UnknownType when an atom names nothing in the
    model.
    """
    index = ModelIndex(model)
    _validate_atoms(index, expr)
    return {
        path for element, path in index.pairs if _matches(index, element, expr)
    }


def _validate_atoms(index: ModelIndex, expr: FilterExpr) -> None:
    if isinstance(expr, (FAnd, FOr)):
        _validate_atoms(index, expr.left)
        _validate_atoms(index, expr.right)
    elif isinstance(expr, FNot):
        _validate_atoms(index, expr.operand)
    elif isinstance(expr, (FHasMeta, FMetaEq)):
        name = expr.metadata_def[-1]
        if not any(
            el.kind is ElementKind.METADATA_DEF and el.name == name
            for el, _ in index.pairs
        ):
            raise UnknownMetadataDef(name)
    elif isinstance(expr, FTyped):
        name = expr.type_name[-1]
        if not any(el.name == name and el.is_def for el, _ in index.pairs):
            raise UnknownType(name)


def _matches(index: ModelIndex, element: Element, expr: FilterExpr) -> bool:
    if isinstance(expr, FAnd):
        return _matches(index, element, expr.left) and _matches(index, element, expr.right)
    if isinstance(expr, FOr):
        return _matches(index, element, expr.left) or _matches(index, element, expr.right)
    if isinstance(expr, FNot):
        return not _matches(index, element, expr.operand)
    if isinstance(expr, FHasMeta):
        return any(
            app.meta_def and app.meta_def[-1] == expr.metadata_def[-1]
            for app in index.effective_metadata(element)
        )
    if isinstance(expr, FMetaEq):
        return any(
            app.meta_def
            and app.meta_def[-1] == expr.metadata_def[-1]
            and _binding_equals(app, expr.attribute, expr.literal)
            for app in index.effective_metadata(element)
        )
    if isinstance(expr, FTyped):
        return _typing_reaches(index, element, expr.type_name)
    if isinstance(expr, FKind):
        return element.kind.value == expr.kind
    raise TypeError(f"not a filter expression: {expr!r}")


def _binding_equals(app: Element, attribute: str, literal: Expr) -> bool:
    return any(attr == attribute and value == literal for attr, value in app.bindings)


def _typing_reaches(index: ModelIndex, element: Element, type_name: QName) -> bool:
    seen: set[int] = set()
    frontier = [element]
    while frontier:
        current = frontier.pop()
        if id(current) in seen:
            continue
        seen.add(id(current))
        if current is not element and _names_match(index, current, type_name):
            return True
        for rel in current.rels(RelKind.TYPING):
            target = index.resolve_target(current, rel.target)
            if target is not None:
                frontier.append(target)
    return False


def _names_match(index: ModelIndex, element: Element, type_name: QName) -> bool:
    if len(type_name) == 1:
        return element.name == type_name[0]
    path = index.path_of.get(id(element))
    return path is not None and path[-len(type_name):] == type_name


# ---------------------------------------------------------------------------
# View rendering


def render_view(model: Element, view_path: QName | str) -> tuple[set[QName], str]:
    """Exposed subtrees intersected with the view's filter, plus a report."""
    path = qname(view_path) if isinstance(view_path, str) else view_path
    index = ModelIndex(model)
    view = index.by_path.get(path)
    if view is None and len(path) == 1:
        # Allow addressing a top-level view without the package prefix.
        full = (model.name or "",) + path
        view = index.by_path.get(full)
        path = full if view is not None else path
    if view is None or view.kind is not ElementKind.VIEW:
        prefix = path[:-1]
        while prefix and prefix not in index.by_path:
            prefix = prefix[:-1]
        raise UnknownElement(qname_text(path), qname_text(prefix))

    exposed: set[QName] = set()
    for rel in view.rels(RelKind.EXPOSES):
        target = index.resolve_target(view, rel.target)
        if target is None:
            continue
        root = index.path_of[id(target)]
        exposed |= {
            p for _, p in index.pairs if p[: len(root)] == root
        }
    if view.filter is not None and exposed:
        exposed &= evaluate_filter(model, view.filter)

    report = _grouped_report(index, view, exposed)
    return exposed, report


def _grouped_report(index: ModelIndex, view: Element, paths: set[QName]) -> str:
    lines = [f"view {view.name!r}: {len(paths)} elements"]
    groups: dict[str, list[str]] = {}
    for path in paths:
        element = index.by_path[path]
        groups.setdefault(element.kind.value, []).append(qname_text(path))
    for kind in sorted(groups):
        lines.append(f"  {kind}:")
        for name in sorted(groups[kind]):
            lines.append(f"    {name}")
    return "\n".join(lines)


def query_json(query: str, elements: set[QName]) -> dict:
    """Stable JSON shape shared by the trace and view commands."""
    return {"query": query, "elements": sorted(qname_text(p) for p in elements)}
