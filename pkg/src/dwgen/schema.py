"""Warehouse metamodel and its instantiation into concrete tables.

Dimension hierarchies are built from the coarsest level down, each finer
level ``dim_sfactor`` times larger and carrying a foreign key to the level
above. Fact tables reference the finest level of each linked dimension; their
extension is the cross product of those keys thinned by an independent
Bernoulli(density) trial per combination.

Draw order for a whole warehouse: fact/dimension linkage, then dimensions in
index order (levels top-down, tuples in key order), then fact extensions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .params import LowLevelParams, validate
from .randomness import (
    DEFAULT_REFERENTIAL,
    KeySequence,
    RandomStream,
    StringReferential,
    fact_table_name,
    float_measure_name,
    gaussian_index,
    level_table_name,
    primary_key_name,
    string_descriptor_name,
)

MEASURE_SCALE = 10_000.0
FACT_CHUNK = 1 << 16
_MAX_COMBINATIONS = 2 ** 63 - 1

PRIMARY_KEY = "primary_key"
DESCRIPTOR = "descriptor"
MEASURE = "measure"
FOREIGN_KEY = "foreign_key"


class SchemaError(ValueError):
    pass


@dataclass(eq=False)
class Attribute:
    name: str
    kind: str
    target: Optional["Relation"] = field(default=None, repr=False)

    def __post_init__(self):
        if (self.kind == FOREIGN_KEY) != (self.target is not None):
            raise SchemaError(f"{self.name}: only foreign keys carry a target")


@dataclass(eq=False)
class Relation:
    """A table: ``intention`` is its attribute list, ``columns`` its extension.

    Extension is stored column-wise: int64 keys, float64 measures, and
    descriptor values as indices into ``referential``.
    """

    name: str
    intention: list
    columns: list = field(default_factory=list, repr=False)
    referential: StringReferential = field(default=DEFAULT_REFERENTIAL, repr=False)

    def __len__(self):
        return 0 if not self.columns else len(self.columns[0])

    def attribute(self, name: str) -> Attribute:
        for a in self.intention:
            if a.name == name:
                return a
        raise KeyError(f"{self.name} has no attribute {name}")

    def column(self, name: str) -> np.ndarray:
        for a, col in zip(self.intention, self.columns):
            if a.name == name:
                return col
        raise KeyError(f"{self.name} has no attribute {name}")

    def of_kind(self, kind: str) -> list:
        return [a for a in self.intention if a.kind == kind]

    @property
    def primary_key(self) -> Optional[Attribute]:
        pks = self.of_kind(PRIMARY_KEY)
        return pks[0] if pks else None

    @property
    def keys(self) -> np.ndarray:
        pk = self.primary_key
        if pk is None:
            raise SchemaError(f"{self.name} has no single-column primary key")
        return self.column(pk.name)

    def rendered_columns(self) -> list:
        """Columns as Python values, descriptors expanded to their strings."""
        out = []
        for a, col in zip(self.intention, self.columns):
            if a.kind == DESCRIPTOR:
                words = [f"{a.name}_{w}" for w in self.referential.pool]
                out.append([words[i] for i in col.tolist()])
            else:
                out.append(col.tolist())
        return out

    @property
    def extension(self) -> list:
        return list(zip(*self.rendered_columns())) if self.columns else []


@dataclass(eq=False)
class HierarchyLevel:
    relation: Relation
    dimension: int
    level: int  # build order, 1 = coarsest
    depth: int = 1  # 1 = finest
    coarser: Optional["HierarchyLevel"] = field(default=None, repr=False)
    finer: Optional["HierarchyLevel"] = field(default=None, repr=False)

    @property
    def name(self) -> str:
        return self.relation.name

    @property
    def descriptors(self) -> list:
        return self.relation.of_kind(DESCRIPTOR)

    @property
    def foreign_key(self) -> Optional[Attribute]:
        fks = self.relation.of_kind(FOREIGN_KEY)
        return fks[0] if fks else None


@dataclass(eq=False)
class Dimension:
    index: int
    finest_level: HierarchyLevel

    @property
    def levels(self) -> list:
        """Levels coarsest first."""
        out = []
        hl = self.finest_level
        while hl is not None:
            out.append(hl)
            hl = hl.coarser
        return out[::-1]

    @property
    def nb_levels(self) -> int:
        return self.finest_level.level

    def at_depth(self, depth: int) -> HierarchyLevel:
        hl = self.finest_level
        for _ in range(depth - 1):
            hl = hl.coarser
        return hl


@dataclass(eq=False)
class FactTable:
    relation: Relation
    dimensions: list
    measures: list
    density: float = 1.0

    @property
    def name(self) -> str:
        return self.relation.name

    def foreign_key_for(self, dimension: Dimension) -> Attribute:
        return self.relation.intention[self.dimensions.index(dimension)]


@dataclass(eq=False)
class WarehouseSchema:
    fact_tables: list
    dimensions: list
    params: LowLevelParams
    seed: int = 0
    generator: str = "splitmix64"

    def relations(self) -> list:
        """Dimension levels coarse-to-fine by dimension, then fact tables."""
        out = [hl.relation for d in self.dimensions for hl in d.levels]
        return out + [f.relation for f in self.fact_tables]

    def relation(self, name: str) -> Relation:
        for r in self.relations():
            if r.name == name:
                return r
        raise KeyError(name)

    def shape(self) -> str:
        return schema_shape(self)


def generate_dimensions(p: LowLevelParams, rng: RandomStream,
                        referential: StringReferential = DEFAULT_REFERENTIAL) -> list:
    """Build every dimension hierarchy and return the dimensions.

    Per tuple the draws are: one uniform per descriptor (referential pick),
    then, below the top level, two uniforms for the Gaussian coarser key.
    """
    dims = []
    for d in range(p.tot_nb_dim):
        previous = None
        size = p.hhlevel_size[d]
        nb_levels = p.nb_levels[d]
        for j in range(1, nb_levels + 1):
            name = level_table_name(d + 1, j)
            n_att = p.nb_att[d][j - 1]
            intention = [Attribute(primary_key_name(name), PRIMARY_KEY)]
            intention += [Attribute(string_descriptor_name(name, k), DESCRIPTOR)
                          for k in range(1, n_att + 1)]
            if previous is not None:
                intention.append(Attribute(previous.relation.primary_key.name, FOREIGN_KEY,
                                           previous.relation))
            width = n_att + (2 if previous is not None else 0)
            draws = rng.uniforms(size * width).reshape(size, width)
            columns = [KeySequence().take(size)]
            for k in range(n_att):
                columns.append(kernels.uniform_pick(np.ascontiguousarray(draws[:, k]),
                                                    len(referential)))
            if previous is not None:
                parent_keys = previous.relation.keys
                picks = kernels.gaussian_pick(np.ascontiguousarray(draws[:, n_att]),
                                              np.ascontiguousarray(draws[:, n_att + 1]),
                                              len(parent_keys), rng.sigma_fraction)
                columns.append(parent_keys[picks])
            hl = HierarchyLevel(Relation(name, intention, columns, referential),
                                dimension=d + 1, level=j, depth=nb_levels - j + 1,
                                coarser=previous)
            if previous is not None:
                previous.finer = hl
            previous = hl
            size *= p.dim_sfactor[d]
        dims.append(Dimension(d + 1, previous))
    return dims


def link_fact_dimensions(p: LowLevelParams, rng: RandomStream) -> list:
    """0-based dimension indices for each fact table.

    Gaussian-weighted pick without replacement inside one fact table; fact
    tables may share dimensions.
    """
    out = []
    for f in range(p.nb_ft):
        if p.nb_dim[f] > p.tot_nb_dim:
            raise SchemaError(f"fact table {f + 1} needs {p.nb_dim[f]} dimensions "
                              f"but only {p.tot_nb_dim} exist")
        remaining = list(range(p.tot_nb_dim))
        chosen = []
        for _ in range(p.nb_dim[f]):
            chosen.append(remaining.pop(gaussian_index(rng, len(remaining))))
        out.append(chosen)
    return out


def cross_product_size(sizes) -> int:
    total = 1
    for s in sizes:
        total *= int(s)
    return total


def generate_fact_extension(fact: FactTable, rng: RandomStream, nb_meas: Optional[int] = None) -> list:
    """Columns of the fact extension: one FK column per dimension, then measures.

    Combinations are visited in lexicographic order (dimension order, then key
    order) in chunks of ``FACT_CHUNK``. Per chunk: one uniform per combination
    for retention, then ``nb_meas`` uniforms per retained combination.
    """
    finest = [d.finest_level.relation for d in fact.dimensions]
    radices = np.array([len(r) for r in finest], dtype=np.int64)
    total = cross_product_size(radices.tolist())
    if total > _MAX_COMBINATIONS:
        raise SchemaError(f"{fact.name}: cross product of {total} combinations overflows "
                          "the 64-bit iteration counter; use fewer or smaller dimensions")
    m = len(fact.measures) if nb_meas is None else nb_meas
    keys = [r.keys for r in finest]
    fk_parts = [[] for _ in finest]
    meas_parts = []
    start = 0
    while start < total:
        step = min(FACT_CHUNK, total - start)
        kept = kernels.bernoulli_retain(rng.uniforms(step), fact.density, start)
        digits = kernels.decode_mixed_radix(kept, radices)
        for d, col in enumerate(fk_parts):
            col.append(keys[d][digits[:, d]])
        meas_parts.append(kernels.cents(rng.uniforms(len(kept) * m), MEASURE_SCALE)
                          .reshape(len(kept), m))
        start += step
    columns = [np.concatenate(c) if c else np.empty(0, dtype=np.int64) for c in fk_parts]
    measures = np.concatenate(meas_parts) if meas_parts else np.empty((0, m))
    columns += [np.ascontiguousarray(measures[:, k]) for k in range(m)]
    return columns


def build_fact_tables(p: LowLevelParams, dims: list, assignment: list) -> list:
    facts = []
    for f, chosen in enumerate(assignment):
        name = fact_table_name(f + 1)
        linked = [dims[i] for i in chosen]
        intention = [Attribute(d.finest_level.relation.primary_key.name, FOREIGN_KEY,
                               d.finest_level.relation) for d in linked]
        measures = [Attribute(float_measure_name(name, k), MEASURE)
                    for k in range(1, p.nb_meas[f] + 1)]
        facts.append(FactTable(Relation(name, intention + measures), linked, measures,
                               density=p.density[f]))
    return facts


def generate_warehouse(p: LowLevelParams, rng: RandomStream,
                       referential: StringReferential = DEFAULT_REFERENTIAL,
                       assignment: Optional[list] = None) -> WarehouseSchema:
    """Generate the whole warehouse.

    ``assignment`` is the output of ``link_fact_dimensions`` when it has
    already been drawn from ``rng`` (to estimate size first).
    """
    problems = validate(p)
    if problems:
        raise SchemaError("; ".join(problems))
    if assignment is None:
        assignment = link_fact_dimensions(p, rng)
    dims = generate_dimensions(p, rng, referential)
    facts = build_fact_tables(p, dims, assignment)
    for fact in facts:
        fact.relation.columns = generate_fact_extension(fact, rng)
    return WarehouseSchema(facts, dims, p, seed=rng.seed, generator=rng.generator)


def check_integrity(schema: WarehouseSchema) -> list:
    """Full scan for dangling foreign keys, duplicate keys, and ragged columns."""
    problems = []
    for rel in schema.relations():
        n = len(rel)
        if len(rel.columns) != len(rel.intention):
            problems.append(f"{rel.name}: {len(rel.columns)} columns for "
                            f"{len(rel.intention)} attributes")
            continue
        for a, col in zip(rel.intention, rel.columns):
            if len(col) != n:
                problems.append(f"{rel.name}.{a.name}: {len(col)} values, expected {n}")
        pk = rel.primary_key
        if pk is not None:
            keys = rel.column(pk.name)
            if len(np.unique(keys)) != n:
                problems.append(f"{rel.name}: duplicate primary key values")
        for a, col in zip(rel.intention, rel.columns):
            if a.kind == FOREIGN_KEY:
                dangling = int(np.count_nonzero(~np.isin(col, a.target.keys)))
                if dangling:
                    problems.append(f"{rel.name}.{a.name}: {dangling} dangling references "
                                    f"to {a.target.name}")
    for fact in schema.fact_tables:
        fks = [c for a, c in zip(fact.relation.intention, fact.relation.columns)
               if a.kind == FOREIGN_KEY]
        if fks and len(fks[0]):
            combos = np.unique(np.stack(fks, axis=1), axis=0)
            if len(combos) != len(fact.relation):
                problems.append(f"{fact.name}: duplicate foreign-key combinations")
        if len({d.index for d in fact.dimensions}) != len(fact.dimensions):
            problems.append(f"{fact.name}: a dimension is linked twice")
    return problems


def shared_dimensions(schema: WarehouseSchema) -> list:
    uses = {}
    for fact in schema.fact_tables:
        for d in fact.dimensions:
            uses[d.index] = uses.get(d.index, 0) + 1
    return sorted(i for i, n in uses.items() if n >= 2)


def schema_shape(schema: WarehouseSchema) -> str:
    """``constellation`` if >= 2 fact tables share a dimension, else ``star``
    when every dimension is flat, else ``snowflake``."""
    if len(schema.fact_tables) >= 2 and shared_dimensions(schema):
        return "constellation"
    if all(d.nb_levels == 1 for d in schema.dimensions):
        return "star"
    return "snowflake"


def shape_from_params(p: LowLevelParams, assignment: list) -> str:
    """Shape a warehouse will have, read off parameters and links alone."""
    uses = {}
    for chosen in assignment:
        for d in chosen:
            uses[d] = uses.get(d, 0) + 1
    if p.nb_ft >= 2 and any(n >= 2 for n in uses.values()):
        return "constellation"
    if all(n == 1 for n in p.nb_levels):
        return "star"
    return "snowflake"


def schema_manifest(schema: WarehouseSchema) -> dict:
    tables = []
    for rel in schema.relations():
        tables.append({
            "name": rel.name,
            "rows": len(rel),
            "attributes": [
                {"name": a.name, "kind": a.kind,
                 **({"references": a.target.name} if a.target is not None else {})}
                for a in rel.intention
            ],
        })
    return {
        "seed": schema.seed,
        "generator": schema.generator,
        "shape": schema.shape(),
        "fact_tables": [{"name": f.name, "density": f.density,
                         "dimensions": [d.index for d in f.dimensions]}
                        for f in schema.fact_tables],
        "dimensions": [{"index": d.index, "levels": [hl.name for hl in d.levels]}
                       for d in schema.dimensions],
        "tables": tables,
    }
