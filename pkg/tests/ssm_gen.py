"""Seeded random generator for valid SsmContext values.

Contexts are referentially valid by construction: every role reference
names a declared individual, every performer is an actor or the owner,
and flows only ever point forward in declaration order (so the flow
graph is a DAG).  Warning paths stay reachable: some environmental
constraints lack expressions, some display names collide, and some
root definitions have no conceptual model.
"""
from __future__ import annotations

import random

from ssm2sysml.exprs import Binary, Lit, Ref
from ssm2sysml.ssm_model import (
    Activity,
    ConceptualModel,
    EnvConstraint,
    Flow,
    IdRef,
    Individual,
    MonitorLink,
    RootDefinition,
    SsmContext,
    Transformation,
)

PERSON_TYPES = ("Employee", "Person", "Operator")
SUBJECT_TYPES = ("Role", "Machine", "Asset")
ITEM_TYPES = ("Tool", "License", "Material", "Ticket")
DISPLAY_WORDS = ("Line", "Shift", "Site", "Pool", "Desk")


def _individuals(rng: random.Random) -> tuple[Individual, ...]:
    count = rng.randint(1, 5)
    out = []
    for i in range(count):
        display = f"{rng.choice(DISPLAY_WORDS)} {i}"
        if i > 0 and rng.random() < 0.15:
            display = out[0].display_name  # duplicate on purpose (W-DUPNAME)
        out.append(Individual(f"ind{i}", display, rng.choice(PERSON_TYPES)))
    return tuple(out)


def _constraints(rng: random.Random, rd_index: int) -> tuple[EnvConstraint, ...]:
    out: list[EnvConstraint] = []
    for j in range(rng.randint(0, 3)):
        # The concrete syntax ties the kind keyword to an expression
        # string, so expression-free constraints keep the default kind.
        expr = None
        kind = "require"
        if rng.random() < 0.7:
            expr = Binary(">", Ref(("level", "amount")), Lit(j))
            kind = rng.choice(["require", "assume", "assert"])
        refines = None
        if out and rng.random() < 0.4:
            refines = IdRef(out[0].id)
        out.append(
            EnvConstraint(
                id=f"ec{rd_index}_{j}",
                text=f"constraint {j} of definition {rd_index}",
                expr=expr,
                kind=kind,
                refines=refines,
            )
        )
    return tuple(out)


def _root_definition(
    rng: random.Random, index: int, individuals: tuple[Individual, ...]
) -> RootDefinition:
    ids = [ind.id for ind in individuals]
    customers = tuple(IdRef(i) for i in rng.sample(ids, rng.randint(1, min(2, len(ids)))))
    actors = tuple(IdRef(i) for i in rng.sample(ids, rng.randint(1, min(2, len(ids)))))
    owner = IdRef(rng.choice(ids))
    n_in = rng.randint(0, 2)
    n_out = rng.randint(0, 2)
    transformation = Transformation(
        statement=f"transform situation {index}",
        subject_name=f"subj{index}",
        subject_type=rng.choice(SUBJECT_TYPES),
        inputs=tuple((f"in{index}_{k}", rng.choice(ITEM_TYPES)) for k in range(n_in)),
        outputs=tuple((f"out{index}_{k}", rng.choice(ITEM_TYPES)) for k in range(n_out)),
    )
    return RootDefinition(
        id=f"rd{index}",
        customers=customers,
        actors=actors,
        owner=owner,
        transformation=transformation,
        worldview=f"worldview statement {index}",
        environmental_constraints=_constraints(rng, index),
    )


def _conceptual_model(rng: random.Random, rd: RootDefinition) -> ConceptualModel:
    performers = [ref.id for ref in rd.actors] + [rd.owner.id]
    count = rng.randint(1, 6)
    activities = tuple(
        Activity(f"act_{rd.id}_{i}", f"step {i} of {rd.id}", IdRef(rng.choice(performers)))
        for i in range(count)
    )
    flows: list[Flow] = []
    for j in range(1, count):
        if rng.random() < 0.8:
            k = rng.randrange(j)  # forward edge only: DAG by construction
            flows.append(Flow(IdRef(activities[k].id), IdRef(activities[j].id)))
    monitors = tuple(
        MonitorLink(
            f"mon_{rd.id}_{m}",
            f"monitor {m} of {rd.id}",
            tuple(
                IdRef(a.id)
                for a in rng.sample(activities, rng.randint(1, min(2, count)))
            ),
        )
        for m in range(rng.randint(0, 2))
    )
    return ConceptualModel(IdRef(rd.id), activities, tuple(flows), monitors)


def gen_context(seed: int) -> SsmContext:
    rng = random.Random(seed)
    individuals = _individuals(rng)
    rds = tuple(
        _root_definition(rng, i, individuals) for i in range(rng.randint(0, 3))
    )
    cms = tuple(
        _conceptual_model(rng, rd) for rd in rds if rng.random() < 0.8
    )
    return SsmContext(
        name=f"Ctx{seed}",
        individuals=individuals,
        root_definitions=rds,
        conceptual_models=cms,
    )
