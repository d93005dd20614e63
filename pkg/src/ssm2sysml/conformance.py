"""Structural conformance rules for mapped packages.

Ten rules codify the mandatory modelling patterns: actors and
stakeholders subset individual occurrences, environmental-constraint
requirements carry constraints, the worldview viewpoint carries
rationale, the transformation use case is well formed, concern and use
case share a subject, the view/viewpoint/concern chain is complete,
occurrences are typed, all six CATWOE roles are tagged, and the owner
is represented as a stakeholder.

The engine recognizes the mapping's fixed metadata vocabulary
(`CATWOE` with attribute `element`, `Rationale` with attribute `text`)
by definition name.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .diagnostics import Diagnostic, Severity
from .errors import UnknownRule
from .exprs import EnumLit, Lit
from .mapper import CATWOE_DEF, RATIONALE_DEF
from .sysml_ast import Element, ElementKind, ModelIndex, QName, RelKind, qname_text

Checker = Callable[["_Context"], list[Diagnostic]]


@dataclass(frozen=True)
class Rule:
    id: str
    severity: Severity
    description: str
    rationale: str
    checker: Checker


class _Context:
    """Shared per-check working state: index, helpers, result sink."""

    def __init__(self, model: Element) -> None:
        self.model = model
        self.index = ModelIndex(model)
        self.pairs = self.index.pairs

    def path_text(self, element: Element) -> str:
        path = self.index.path_of.get(id(element))
        return qname_text(path) if path else element.name or "<anonymous>"

    def ancestors(self, element: Element) -> list[tuple[Element, QName]]:
        """Enclosing elements, innermost first."""
        path = self.index.path_of.get(id(element))
        if path is None:
            return []
        out = []
        for cut in range(len(path) - 1, 0, -1):
            prefix = path[:cut]
            if prefix in self.index.by_path:
                out.append((self.index.by_path[prefix], prefix))
        return out

    def enclosing(self, element: Element, kinds: frozenset[ElementKind]) -> Element | None:
        for ancestor, _ in self.ancestors(element):
            if ancestor.kind in kinds:
                return ancestor
        return None

    def roles(self, element: Element, inherited: bool = True) -> set[str]:
        """CATWOE role labels tagged on (or inherited by) the element."""
        apps = (
            self.index.effective_metadata(element)
            if inherited
            else element.metadata_applications()
        )
        labels: set[str] = set()
        for app in apps:
            if app.meta_def and app.meta_def[-1] == CATWOE_DEF:
                for attr, value in app.bindings:
                    if attr == "element" and isinstance(value, EnumLit):
                        labels.add(value.literal)
        return labels

    def subset_targets(self, element: Element) -> list[Element]:
        """Resolvable subsetting targets of the element."""
        out = []
        for rel in element.rels(RelKind.SUBSETS):
            target = self.index.resolve_target(element, rel.target)
            if target is not None:
                out.append(target)
        return out

    def is_inside(self, element: Element, container: Element) -> bool:
        outer = self.index.path_of.get(id(container))
        inner = self.index.path_of.get(id(element))
        return (
            outer is not None
            and inner is not None
            and len(inner) > len(outer)
            and inner[: len(outer)] == outer
        )


_USE_CASES = frozenset({ElementKind.USE_CASE, ElementKind.USE_CASE_DEF})
_ALL_ROLES = ("Customer", "Actor", "Transformation", "Worldview", "Owner", "Environment")


def _diag(rule: "Rule", ctx: _Context, element: Element, detail: str) -> Diagnostic:
    return Diagnostic(
        rule.id,
        rule.severity,
        ctx.path_text(element),
        element.span,
        f"[{rule.id}] {ctx.path_text(element)}: {detail}",
    )


def _check_act_1(ctx: _Context) -> list[Diagnostic]:
    out = []
    for element, _ in ctx.pairs:
        if element.kind is not ElementKind.ACTOR:
            continue
        ucase = ctx.enclosing(element, _USE_CASES)
        if ucase is None:
            continue
        ok = any(
            target.kind is ElementKind.INDIVIDUAL and not ctx.is_inside(target, ucase)
            for target in ctx.subset_targets(element)
        )
        if not ok:
            out.append(
                _diag(
                    _RULE_BY_ID["R-ACT-1"],
                    ctx,
                    element,
                    "actor usage does not subset an individual occurrence "
                    "declared outside the use case",
                )
            )
    return out


def _check_stk_1(ctx: _Context) -> list[Diagnostic]:
    out = []
    for element, _ in ctx.pairs:
        if element.kind is not ElementKind.STAKEHOLDER:
            continue
        ok = any(
            target.kind is ElementKind.INDIVIDUAL
            for target in ctx.subset_targets(element)
        )
        if not ok:
            out.append(
                _diag(
                    _RULE_BY_ID["R-STK-1"],
                    ctx,
                    element,
                    "stakeholder usage does not subset an individual occurrence",
                )
            )
    return out


def _check_env_1(ctx: _Context) -> list[Diagnostic]:
    out = []
    for element, _ in ctx.pairs:
        if element.kind not in (ElementKind.REQUIREMENT, ElementKind.REQUIREMENT_DEF):
            continue
        typing = element.typing()
        if typing is None:
            continue
        target = ctx.index.resolve_target(element, typing)
        if target is None or "Environment" not in ctx.roles(target):
            continue
        has_constraint = any(
            child.kind is ElementKind.CONSTRAINT for child in element.children
        )
        if not has_constraint:
            out.append(
                _diag(
                    _RULE_BY_ID["R-ENV-1"],
                    ctx,
                    element,
                    "environmental-constraint requirement carries no "
                    "require/assume/assert constraint",
                )
            )
    return out


def _rationale_text(element: Element) -> str | None:
    for app in element.metadata_applications():
        if app.meta_def and app.meta_def[-1] == RATIONALE_DEF:
            for attr, value in app.bindings:
                if attr == "text" and isinstance(value, Lit) and isinstance(value.value, str):
                    return value.value
    return None


def _check_wvw_1(ctx: _Context) -> list[Diagnostic]:
    out = []
    for element, _ in ctx.pairs:
        if element.kind is not ElementKind.VIEWPOINT:
            continue
        if "Worldview" not in ctx.roles(element):
            continue
        text = _rationale_text(element)
        if not text:
            out.append(
                _diag(
                    _RULE_BY_ID["R-WVW-1"],
                    ctx,
                    element,
                    "worldview viewpoint lacks rationale metadata with nonempty text",
                )
            )
    return out


def _transformation_use_cases(ctx: _Context) -> list[Element]:
    return [
        element
        for element, _ in ctx.pairs
        if element.kind is ElementKind.USE_CASE
        and "Transformation" in ctx.roles(element)
    ]


def _check_trf_1(ctx: _Context) -> list[Diagnostic]:
    out = []
    rule = _RULE_BY_ID["R-TRF-1"]
    for element in _transformation_use_cases(ctx):
        subjects = [c for c in element.children if c.kind is ElementKind.SUBJECT]
        if len(subjects) != 1:
            out.append(
                _diag(
                    rule,
                    ctx,
                    element,
                    f"transformation use case declares {len(subjects)} subjects "
                    "(exactly one required)",
                )
            )
        objectives = [
            c
            for c in element.children
            if c.kind is ElementKind.REQUIREMENT and c.is_objective
        ]
        if not any(obj.rels(RelKind.REFERENCES) for obj in objectives):
            out.append(
                _diag(
                    rule,
                    ctx,
                    element,
                    "transformation use case objective references no requirement",
                )
            )
    return out


def _subject_target(ctx: _Context, element: Element) -> Element | None:
    for child in element.children:
        if child.kind is ElementKind.SUBJECT:
            targets = ctx.subset_targets(child)
            if targets:
                return targets[0]
    return None


def _check_sub_1(ctx: _Context) -> list[Diagnostic]:
    uc_subjects = {
        id(target)
        for ucase in _transformation_use_cases(ctx)
        if (target := _subject_target(ctx, ucase)) is not None
    }
    if not uc_subjects:
        return []
    out = []
    for element, _ in ctx.pairs:
        if element.kind is not ElementKind.CONCERN:
            continue
        target = _subject_target(ctx, element)
        if target is not None and id(target) not in uc_subjects:
            out.append(
                _diag(
                    _RULE_BY_ID["R-SUB-1"],
                    ctx,
                    element,
                    "concern subject differs from every transformation "
                    "use case subject",
                )
            )
    return out


def _check_view_1(ctx: _Context) -> list[Diagnostic]:
    out = []
    rule = _RULE_BY_ID["R-VIEW-1"]
    for element, _ in ctx.pairs:
        if element.kind is ElementKind.VIEW and not element.rels(RelKind.SATISFIES):
            out.append(_diag(rule, ctx, element, "view satisfies no viewpoint"))
        elif element.kind is ElementKind.VIEWPOINT and not element.rels(RelKind.FRAMES):
            out.append(_diag(rule, ctx, element, "viewpoint frames no concern"))
    return out


def _check_ind_1(ctx: _Context) -> list[Diagnostic]:
    out = []
    for element, _ in ctx.pairs:
        if element.kind is not ElementKind.INDIVIDUAL:
            continue
        ok = any(
            (target := ctx.index.resolve_target(element, rel.target)) is not None
            and target.kind is ElementKind.INDIVIDUAL_DEF
            for rel in element.rels(RelKind.TYPING)
        )
        if not ok:
            out.append(
                _diag(
                    _RULE_BY_ID["R-IND-1"],
                    ctx,
                    element,
                    "individual occurrence is not typed by an individual definition",
                )
            )
    return out


def _check_cat_1(ctx: _Context) -> list[Diagnostic]:
    out = []
    for element, _ in ctx.pairs:
        if element.kind is not ElementKind.PACKAGE:
            continue
        transformation_inside = any(
            ucase is element or ctx.is_inside(ucase, element)
            for ucase in _transformation_use_cases(ctx)
        )
        if not transformation_inside:
            continue
        present: set[str] = set()
        for member, _ in ctx.pairs:
            if member is element or ctx.is_inside(member, element):
                present |= ctx.roles(member, inherited=False)
        missing = [label for label in _ALL_ROLES if label not in present]
        if missing:
            out.append(
                _diag(
                    _RULE_BY_ID["R-CAT-1"],
                    ctx,
                    element,
                    "transformation package is missing CATWOE tags: "
                    + ", ".join(missing),
                )
            )
    return out


def _check_own_1(ctx: _Context) -> list[Diagnostic]:
    referenced = {
        id(target)
        for element, _ in ctx.pairs
        if element.kind is ElementKind.STAKEHOLDER
        for target in ctx.subset_targets(element)
    }
    out = []
    for element, _ in ctx.pairs:
        if element.kind is not ElementKind.INDIVIDUAL:
            continue
        if "Owner" not in ctx.roles(element):
            continue
        if id(element) not in referenced:
            out.append(
                _diag(
                    _RULE_BY_ID["R-OWN-1"],
                    ctx,
                    element,
                    "owner-tagged individual is not referenced by any "
                    "stakeholder usage",
                )
            )
    return out


RULES: tuple[Rule, ...] = (
    Rule(
        "R-ACT-1",
        Severity.ERROR,
        "Every actor usage inside a use case subsets an individual "
        "occurrence declared outside the use case.",
        "A local actor must subset the high-level occurrence so one "
        "real-world entity keeps one identity across use cases.",
        _check_act_1,
    ),
    Rule(
        "R-STK-1",
        Severity.ERROR,
        "Every stakeholder usage subsets an individual occurrence.",
        "The same individual can appear as stakeholder and actor only "
        "when both usages subset one occurrence.",
        _check_stk_1,
    ),
    Rule(
        "R-ENV-1",
        Severity.ERROR,
        "Every requirement typed by the Environment-tagged definition "
        "carries at least one require/assume/assert constraint.",
        "Environmental constraints must hold both the textual description "
        "and at least one formal constraint.",
        _check_env_1,
    ),
    Rule(
        "R-WVW-1",
        Severity.ERROR,
        "Every Worldview-tagged viewpoint carries Rationale metadata "
        "with nonempty text.",
        "The worldview survives only as rationale attached to the "
        "viewpoint; without it the tag is empty ceremony.",
        _check_wvw_1,
    ),
    Rule(
        "R-TRF-1",
        Severity.ERROR,
        "Every Transformation-tagged use case declares exactly one "
        "subject and its objective references at least one requirement.",
        "The use case carries the transformation's intent: one subject "
        "being transformed, with the objective referencing a requirement.",
        _check_trf_1,
    ),
    Rule(
        "R-SUB-1",
        Severity.ERROR,
        "The concern's subject equals the use case's subject.",
        "Concern and use case describe the same thing being transformed; "
        "the subjects must resolve to one element.",
        _check_sub_1,
    ),
    Rule(
        "R-VIEW-1",
        Severity.WARNING,
        "Every view satisfies at least one viewpoint, and every viewpoint "
        "frames at least one concern.",
        "Views satisfy one or more viewpoints, which in turn frame one "
        "or more concerns; a dangling link breaks traceability.",
        _check_view_1,
    ),
    Rule(
        "R-IND-1",
        Severity.ERROR,
        "Every individual occurrence is typed by an individual definition.",
        "Occurrences denote specific real-world entities and take their "
        "structure from an individual definition.",
        _check_ind_1,
    ),
    Rule(
        "R-CAT-1",
        Severity.WARNING,
        "Within a transformation package, all six CATWOE roles appear "
        "as metadata tags.",
        "A complete root-definition model tags all six CATWOE elements; "
        "a missing tag usually means a role was never modelled.",
        _check_cat_1,
    ),
    Rule(
        "R-OWN-1",
        Severity.ERROR,
        "The Owner-tagged individual is referenced by at least one "
        "stakeholder usage.",
        "The owner is modelled as a stakeholder; an owner tag without a "
        "stakeholder usage leaves the role unrepresented.",
        _check_own_1,
    ),
)

_RULE_BY_ID: dict[str, Rule] = {rule.id: rule for rule in RULES}


def check(model: Element, rule_ids: Iterable[str] | None = None) -> list[Diagnostic]:
    """Run the rule set over a package; order by (elementPath, ruleId)."""
    if rule_ids is None:
        rules = RULES
    else:
        rules = tuple(_require_rule(rule_id) for rule_id in rule_ids)
    ctx = _Context(model)
    diagnostics: list[Diagnostic] = []
    for rule in rules:
        diagnostics.extend(rule.checker(ctx))
    diagnostics.sort(key=lambda d: (d.element_path, d.rule_id))
    return diagnostics


def _require_rule(rule_id: str) -> Rule:
    rule = _RULE_BY_ID.get(rule_id)
    if rule is None:
        raise UnknownRule(rule_id)
    return rule


def explain(rule_id: str) -> str:
    """Human-readable description of one rule; raises UnknownRule."""
    rule = _require_rule(rule_id)
    return f"{rule.id} ({rule.severity}): {rule.description} {rule.rationale}"
