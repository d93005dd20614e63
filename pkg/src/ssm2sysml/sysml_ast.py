"""Typed AST for the supported SysML v2 textual-notation subset.

The subset is closed: exactly the constructs the mapping and the
conformance rules need.  Every node is an `Element` tagged with an
`ElementKind`; the fields a kind does not use stay at their defaults.
Elements are immutable after construction and structurally comparable;
source spans never participate in equality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, Union

from .errors import AmbiguousName, UnknownElement
from .exprs import Expr
from .source import SourceSpan

QName = tuple[str, ...]


def qname(text: str) -> QName:
    """Split a dotted path into segments (no quoting support here)."""
    return tuple(text.split("."))


def qname_text(path: QName) -> str:
    return ".".join(path)


class ElementKind(enum.Enum):
    PACKAGE = "package"
    METADATA_DEF = "metadata_def"
    ENUM_DEF = "enum_def"
    ATTRIBUTE_DEF = "attribute_def"
    ATTRIBUTE = "attribute"
    INDIVIDUAL_DEF = "individual_def"
    INDIVIDUAL = "individual"
    PART_DEF = "part_def"
    PART = "part"
    ITEM_DEF = "item_def"
    ITEM = "item"
    REQUIREMENT_DEF = "requirement_def"
    REQUIREMENT = "requirement"
    CONSTRAINT = "constraint"
    CONCERN_DEF = "concern_def"
    CONCERN = "concern"
    STAKEHOLDER = "stakeholder"
    VIEWPOINT_DEF = "viewpoint_def"
    VIEWPOINT = "viewpoint"
    VIEW = "view"
    USE_CASE_DEF = "use_case_def"
    USE_CASE = "use_case"
    ACTOR = "actor"
    SUBJECT = "subject"
    ACTION = "action"
    STATE = "state"
    TRANSITION = "transition"
    COMMENT = "comment"
    METADATA = "metadata"  # metadata application, @Def { ... }


DEF_KINDS = frozenset(
    {
        ElementKind.METADATA_DEF,
        ElementKind.ENUM_DEF,
        ElementKind.ATTRIBUTE_DEF,
        ElementKind.INDIVIDUAL_DEF,
        ElementKind.PART_DEF,
        ElementKind.ITEM_DEF,
        ElementKind.REQUIREMENT_DEF,
        ElementKind.CONCERN_DEF,
        ElementKind.VIEWPOINT_DEF,
        ElementKind.USE_CASE_DEF,
    }
)


class RelKind(enum.Enum):
    TYPING = ":"
    SUBSETS = ":>"
    REDEFINES = ":>>"
    REFINES = "refines"
    FRAMES = "frames"
    SATISFIES = "satisfies"
    EXPOSES = "exposes"
    BINDING = "="
    REFERENCES = "references"


# Relationship kinds written inline in the declarator; the rest are body
# statements.  Within Element.relationships the inline ones come first.
INLINE_REL_KINDS = (RelKind.TYPING, RelKind.SUBSETS, RelKind.REDEFINES, RelKind.BINDING)


@dataclass(frozen=True)
class Relationship:
    kind: RelKind
    target: QName


@dataclass(frozen=True)
class Multiplicity:
    lower: int
    upper: int | None = None  # None = unbounded ('*')

    def __post_init__(self) -> None:
        if self.lower < 0 or (self.upper is not None and self.upper < self.lower):
            raise ValueError("multiplicity requires 0 <= lower <= upper")


@dataclass(frozen=True)
class Assignment:
    """`assign target := expr;` inside an action body."""

    target: QName
    value: Expr


@dataclass(frozen=True)
class Succession:
    """`first a then b;` ordering between sibling body members."""

    source: str
    target: str


# --- view filter algebra ----------------------------------------------------

FilterExpr = Union["FAnd", "FOr", "FNot", "FHasMeta", "FMetaEq", "FTyped", "FKind"]


@dataclass(frozen=True)
class FAnd:
    left: FilterExpr
    right: FilterExpr


@dataclass(frozen=True)
class FOr:
    left: FilterExpr
    right: FilterExpr


@dataclass(frozen=True)
class FNot:
    operand: FilterExpr


@dataclass(frozen=True)
class FHasMeta:
    """`@Def` — the element carries (or inherits) any application of Def."""

    metadata_def: QName


@dataclass(frozen=True)
class FMetaEq:
    """`@Def.attr == literal` — an effective binding equals the literal."""

    metadata_def: QName
    attribute: str
    literal: Expr


@dataclass(frozen=True)
class FTyped:
    """`istype Q` — the element's typing chain reaches Q."""

    type_name: QName


@dataclass(frozen=True)
class FKind:
    """`iskind part` — the element has the named kind."""

    kind: str


@dataclass(frozen=True)
class Element:
    """One node of the subset AST.  `kind` decides which fields matter."""

    kind: ElementKind
    name: str | None = None
    relationships: tuple[Relationship, ...] = ()
    multiplicity: Multiplicity | None = None
    direction: str | None = None  # 'in' / 'out'
    is_ref: bool = False
    is_perform: bool = False  # action declared as `perform action`
    flavor: str | None = None  # action flavor: 'send' | 'accept' | 'decide'
    signal: QName | None = None  # send/accept payload name
    performer: QName | None = None  # action `by <path>` clause
    doc: str | None = None
    value: Expr | None = None  # attribute value / derived expression
    constraint_kind: str | None = None  # require | assume | assert | None
    constraint_expr: Expr | None = None
    is_objective: bool = False
    enum_literals: tuple[str, ...] = ()
    entry_action: QName | None = None  # state
    do_action: QName | None = None  # state
    source: str | None = None  # transition
    target: str | None = None  # transition
    trigger: QName | None = None  # transition accept
    guard: Expr | None = None  # transition guard
    effect: QName | None = None  # transition do
    meta_def: QName | None = None  # metadata application target
    bindings: tuple[tuple[str, Expr], ...] = ()  # metadata attribute bindings
    assignments: tuple[Assignment, ...] = ()
    successions: tuple[Succession, ...] = ()
    filter: FilterExpr | None = None  # view
    children: tuple["Element", ...] = ()
    span: SourceSpan | None = field(default=None, compare=False)

    # -- convenience -------------------------------------------------------

    def rels(self, kind: RelKind) -> tuple[Relationship, ...]:
        return tuple(r for r in self.relationships if r.kind == kind)

    def typing(self) -> QName | None:
        for r in self.relationships:
            if r.kind == RelKind.TYPING:
                return r.target
        return None

    def metadata_applications(self) -> tuple["Element", ...]:
        return tuple(c for c in self.children if c.kind == ElementKind.METADATA)

    def with_children(self, children: tuple["Element", ...]) -> "Element":
        return replace(self, children=children)

    @property
    def is_def(self) -> bool:
        return self.kind in DEF_KINDS


def package(name: str, *children: Element, **kwargs) -> Element:
    return Element(ElementKind.PACKAGE, name=name, children=tuple(children), **kwargs)


# --- traversal and resolution ------------------------------------------------


def walk(model: Element, visitor: Callable[[Element, QName], None] | None = None):
    """Depth-first, document-order traversal visiting every element once.

    Returns (element, path) pairs; the path uses synthesized segments
    (`kind@index`) for unnamed elements so every node has a unique,
    stable address.  If `visitor` is given it is called per element.
    """
    pairs = list(iter_walk(model))
    if visitor is not None:
        for element, path in pairs:
            visitor(element, path)
    return pairs


def iter_walk(model: Element) -> Iterator[tuple[Element, QName]]:
    return _walk(model, (), 0)


def _walk(element: Element, prefix: QName, index: int) -> Iterator[tuple[Element, QName]]:
    segment = element.name if element.name else f"{element.kind.value}@{index}"
    path = prefix + (segment,)
    yield element, path
    for i, child in enumerate(element.children):
        yield from _walk(child, path, i)


def element_paths(model: Element) -> dict[QName, Element]:
    """Map every path in the model to its element (deterministic order)."""
    return {path: el for el, path in iter_walk(model)}


def resolve(model: Element, qualified_name: str | QName) -> Element:
    """Resolve a dot-qualified path from the model root.

    The first segment may be the root package's own name.  Raises
    UnknownElement (with the longest resolvable prefix) or
    AmbiguousName when duplicate siblings make the path ambiguous.
    """
    path = qname(qualified_name) if isinstance(qualified_name, str) else qualified_name
    segments = list(path)
    if segments and segments[0] == model.name:
        segments = segments[1:]
        prefix: list[str] = [model.name or ""]
    else:
        prefix = [model.name or ""]
    current = model
    for segment in segments:
        nxt = _lookup_child(current, segment)
        if nxt is None:
            raise UnknownElement(
                qname_text(path), qname_text(tuple(p for p in prefix if p))
            )
        current = nxt
        prefix.append(segment)
    return current


def _lookup_child(element: Element, name: str) -> Element | None:
    matches = [c for c in element.children if c.name == name]
    if len(matches) > 1:
        raise AmbiguousName(name)
    return matches[0] if matches else None


class ModelIndex:
    """Precomputed path/identity indices for repeated lookups over one model."""

    def __init__(self, model: Element) -> None:
        self.model = model
        self.pairs = list(iter_walk(model))
        self.by_path: dict[QName, Element] = {p: e for e, p in self.pairs}
        self.path_of: dict[int, QName] = {id(e): p for e, p in self.pairs}
        self._meta_cache: dict[int, tuple[Element, ...]] = {}

    def resolve_relative(self, owner_path: QName, target: QName) -> Element | None:
        """Resolve `target` lexically: innermost enclosing namespace outward.

        Returns None when nothing matches.
        """
        for cut in range(len(owner_path) - 1, -1, -1):
            candidate = owner_path[:cut] + target
            if candidate in self.by_path:
                return self.by_path[candidate]
        if target[:1] == (self.model.name,) and target in self.by_path:
            return self.by_path[target]
        return None

    def resolve_target(self, element: Element, target: QName) -> Element | None:
        owner = self.path_of.get(id(element))
        if owner is None:
            return None
        return self.resolve_relative(owner, target)

    def effective_metadata(self, element: Element) -> tuple[Element, ...]:
        """Own metadata applications plus those inherited through typing.

        A usage inherits the tags of its definition; specialization
        chains propagate transitively.  Typing cycles are tolerated.
        """
        return self._effective_metadata(element, set())

    def _effective_metadata(self, element: Element, visiting: set[int]) -> tuple[Element, ...]:
        key = id(element)
        if key in self._meta_cache:
            return self._meta_cache[key]
        if key in visiting:
            return element.metadata_applications()
        visiting.add(key)
        apps = list(element.metadata_applications())
        for rel in element.rels(RelKind.TYPING):
            target = self.resolve_target(element, rel.target)
            if target is not None:
                apps.extend(self._effective_metadata(target, visiting))
        visiting.discard(key)
        result = tuple(apps)
        self._meta_cache[key] = result
        return result


def resolve_relative(model: Element, owner_path: QName, target: QName) -> Element | None:
    return ModelIndex(model).resolve_relative(owner_path, target)


def duplicate_names(model: Element) -> list[QName]:
    """Paths of namespaces containing duplicate member names."""
    bad: list[QName] = []
    for element, path in iter_walk(model):
        seen: set[str] = set()
        for child in element.children:
            if child.name is None:
                continue
            if child.name in seen:
                bad.append(path + (child.name,))
            seen.add(child.name)
    return bad


def count_elements(element: Element) -> int:
    """Independent recursive size counter (used to cross-check walk)."""
    return 1 + sum(count_elements(c) for c in element.children)


def effective_metadata(model: Element, element: Element) -> tuple[Element, ...]:
    """Convenience wrapper over ModelIndex.effective_metadata."""
    return ModelIndex(model).effective_metadata(element)
