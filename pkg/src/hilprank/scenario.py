"""Datasets, the end-to-end assessment pipeline, wind sweeps and report exports.

A dataset is one JSON document::

    {
      "slack_bus": 1000,
      "classes": [{"id": 1, "years": [0, 5], "p0": 0.05, "v_th": 60, "v_max": 120}, ...],
      "buses": [{"id": 101, "load_kw": 0, "load_factor": 0.8, "voll": 3200}, ...],
      "lines": [{"id": 101, "from": 1000, "to": 101, "feeder": 1,
                 "travel_time_h": 0.0, "poles": {"2": 1, "4": 3}}, ...],
      "observed_damage": [{"line": 101, "by_class": {"2": 1, "4": 1}}, ...],
      "feeders": [{"id": 1, "class_counts": {"1": 15, "2": 106, ...}}, ...],
      "notes": ["free text"]
    }

``observed_damage``, ``feeders`` and ``notes`` are optional. When a feeder
declares no ``class_counts`` its class sizes are the sums of its line
inventories.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Hashable, Iterable, Literal, Mapping

import jsonschema

from .damage import (ROUNDING_POLICIES, DamageError, RepairParams, Rounding, class_damage,
                     estimate_line_damage, ingest_observed_damage)
from .fragility import ClassTable, FragilityError, LifetimeClass, validate_class_table
from .network import Bus, Line, Network, NetworkError, build_network, lines_of_feeder
from .valuation import AGGREGATION_MODES, Assessment, Mode, value_network

DAMAGE_SOURCES = ("estimate", "observed")
RANKING_COLUMNS = ("line_id", "feeder_id", "damaged_poles", "t_rep_h", "v_dyn", "v_line_dyn", "rank", "tier")
TIER_COLORS = {"high": "red", "medium": "orange", "low": "green"}

BUNDLED_SLACK_BUS = 1000
BUNDLED_DATASET = "ieee33_3feeders.json"
BUNDLED_NOTES = (
    "Class 2 v_th is 59.5 m/s on every feeder; the feeder-2 and feeder-3 pole tables print it as 5.59.",
    "Feeder-2 class counts are 18/84/110/20 as tabulated; its line inventories sum to 111 in class 3 "
    "(233 poles in total).",
    "Reference damage at 80 m/s, feeder 2, class 3 is 51, not the printed 31: the column total 105 "
    "requires 51 (= round(110 x 0.46471)).",
    "travel_time_h is the printed repair time minus 4 h per damaged pole, clamped to [0, 1]. Feeder-1 "
    "line 17 prints 2.1 h for 5 damaged poles and therefore gets 0.",
)


class DatasetError(Exception):
    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ParseError(DatasetError):
    pass


class SchemaError(DatasetError):
    pass


class ValidationError(DatasetError):
    pass


class InvalidRange(ValueError):
    pass


class IoError(OSError):
    pass


_COUNTS = {"type": "object", "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 0}},
           "additionalProperties": False}
_FEEDER_ID = {"type": ["integer", "string"]}

DATASET_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["slack_bus", "classes", "buses", "lines"],
    "properties": {
        "slack_bus": {"type": "integer"},
        "classes": {"type": "array", "minItems": 1, "items": {
            "type": "object", "required": ["id", "years", "p0", "v_th", "v_max"],
            "properties": {
                "id": {"type": "integer"},
                "years": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
                "p0": {"type": "number"}, "v_th": {"type": "number"}, "v_max": {"type": "number"},
                "note": {"type": "string"}},
            "additionalProperties": False}},
        "buses": {"type": "array", "items": {
            "type": "object", "required": ["id", "load_kw", "load_factor", "voll"],
            "properties": {"id": {"type": "integer"}, "load_kw": {"type": "number"},
                           "load_factor": {"type": "number"}, "voll": {"type": "number"}},
            "additionalProperties": False}},
        "lines": {"type": "array", "items": {
            "type": "object", "required": ["id", "from", "to", "feeder", "poles"],
            "properties": {"id": {"type": "integer"}, "from": {"type": "integer"}, "to": {"type": "integer"},
                           "feeder": _FEEDER_ID, "travel_time_h": {"type": "number"}, "poles": _COUNTS},
            "additionalProperties": False}},
        "observed_damage": {"type": "array", "items": {
            "type": "object", "required": ["line", "by_class"],
            "properties": {"line": {"type": "integer"}, "by_class": _COUNTS},
            "additionalProperties": False}},
        "feeders": {"type": "array", "items": {
            "type": "object", "required": ["id"],
            "properties": {"id": _FEEDER_ID, "class_counts": _COUNTS, "note": {"type": "string"}},
            "additionalProperties": False}},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}


@dataclass(frozen=True)
class ScenarioConfig:
    v_real: float = 80.0
    rounding: Rounding = "nearest"
    mode: Mode = "literal"
    t_rep_av_h: float = 4.0
    damage_source: Literal["estimate", "observed"] = "estimate"

    def __post_init__(self):
        if not self.v_real >= 0:
            raise ValueError(f"v_real must be >= 0, got {self.v_real}")
        if not self.t_rep_av_h > 0:
            raise ValueError(f"t_rep_av_h must be > 0, got {self.t_rep_av_h}")
        if self.rounding not in ROUNDING_POLICIES:
            raise ValueError(f"rounding must be one of {ROUNDING_POLICIES}, got {self.rounding!r}")
        if self.mode not in AGGREGATION_MODES:
            raise ValueError(f"mode must be one of {AGGREGATION_MODES}, got {self.mode!r}")
        if self.damage_source not in DAMAGE_SOURCES:
            raise ValueError(f"damage_source must be one of {DAMAGE_SOURCES}, got {self.damage_source!r}")


@dataclass
class Dataset:
    class_table: ClassTable
    network: Network
    class_counts: dict[Hashable, dict[int, int]]
    observed_damage: dict[int, dict[int, int]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    source: str | None = None

    @property
    def total_poles(self) -> int:
        return sum(line.total_poles for line in self.network.lines.values())

    def feeder_poles(self, feeder) -> int:
        return sum(self.network.lines[lid].total_poles for lid in lines_of_feeder(self.network, feeder))


# -- loading ---------------------------------------------------------------

def _counts(raw: Mapping[str, int]) -> dict[int, int]:
    return {int(k): int(v) for k, v in raw.items()}


def dataset_from_dict(doc: Mapping, source: str = "<dataset>") -> Dataset:
    """Validate a parsed dataset document and build the :class:`Dataset`."""
    validator = jsonschema.Draft202012Validator(DATASET_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        err = errors[0]
        where = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
        raise SchemaError(err.message, f"{source}: ${where}")

    def build(kind, idx, factory):
        try:
            return factory()
        except ValueError as exc:
            raise ValidationError(str(exc), f"{source}: {kind}[{idx}]") from exc

    classes = [build("classes", i, lambda c=c: LifetimeClass(c["id"], tuple(c["years"]), c["p0"], c["v_th"], c["v_max"]))
               for i, c in enumerate(doc["classes"])]
    try:
        table = validate_class_table(sorted(classes, key=lambda c: c.id))
    except FragilityError as exc:
        raise ValidationError(str(exc), f"{source}: classes") from exc

    buses = [build("buses", i, lambda b=b: Bus(b["id"], b["load_kw"], b["load_factor"], b["voll"]))
             for i, b in enumerate(doc["buses"])]
    lines = []
    for i, rec in enumerate(doc["lines"]):
        line = build("lines", i, lambda r=rec: Line(r["id"], r["from"], r["to"], r["feeder"],
                                                    _counts(r["poles"]), r.get("travel_time_h", 0.0)))
        unknown = sorted(set(line.poles_by_class) - set(table.ids))
        if unknown:
            raise ValidationError(f"line {line.id} has poles of undefined classes {unknown}", f"{source}: lines[{i}]")
        lines.append(line)
    try:
        net = build_network(buses, lines, doc["slack_bus"])
    except NetworkError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}", f"{source}: network") from exc

    class_counts: dict[Hashable, dict[int, int]] = {}
    for i, rec in enumerate(doc.get("feeders", [])):
        if rec["id"] not in net.feeders:
            raise ValidationError(f"feeder {rec['id']!r} has no lines", f"{source}: feeders[{i}]")
        if "class_counts" in rec:
            counts = _counts(rec["class_counts"])
            unknown = sorted(set(counts) - set(table.ids))
            if unknown:
                raise ValidationError(f"undefined classes {unknown}", f"{source}: feeders[{i}]")
            class_counts[rec["id"]] = counts
    for f in net.feeders:
        if f not in class_counts:
            totals = {c: 0 for c in table.ids}
            for lid in lines_of_feeder(net, f):
                for c, n in net.lines[lid].poles_by_class.items():
                    totals[c] += n
            class_counts[f] = totals

    observed: dict[int, dict[int, int]] = {}
    for i, rec in enumerate(doc.get("observed_damage", [])):
        where = f"{source}: observed_damage[{i}]"
        if rec["line"] in observed:
            raise ValidationError(f"duplicate observation for line {rec['line']}", where)
        try:
            ingest_observed_damage(net, rec["line"], _counts(rec["by_class"]))
        except (NetworkError, DamageError) as exc:
            raise ValidationError(f"{type(exc).__name__}: {exc}", where) from exc
        observed[rec["line"]] = _counts(rec["by_class"])

    return Dataset(table, net, class_counts, observed, list(doc.get("notes", [])), source)


def _read_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc}", str(path)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}", str(path)) from exc


def load_dataset(path) -> Dataset:
    return dataset_from_dict(_read_json(path), str(path))


def load_observed_damage(path) -> dict[int, dict[int, int]]:
    """Read observed damage records from a JSON file.

    Accepts either a bare list of ``{"line", "by_class"}`` records or a
    document with an ``observed_damage`` list.
    """
    doc = _read_json(path)
    records = doc.get("observed_damage") if isinstance(doc, dict) else doc
    if not isinstance(records, list):
        raise SchemaError("expected a list of observed damage records", str(path))
    out = {}
    for i, rec in enumerate(records):
        try:
            out[int(rec["line"])] = _counts(rec["by_class"])
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise SchemaError(f"malformed record: {exc!r}", f"{path}: [{i}]") from exc
    return out


def dataset_to_dict(ds: Dataset) -> dict:
    net = ds.network
    doc = {
        "slack_bus": net.slack_bus,
        "classes": [{"id": c.id, "years": list(c.lifetime_years), "p0": c.p0, "v_th": c.v_th, "v_max": c.v_max}
                    for c in ds.class_table],
        "buses": [{"id": b.id, "load_kw": b.load_kw, "load_factor": b.load_factor, "voll": b.voll}
                  for b in net.buses.values()],
        "lines": [{"id": l.id, "from": l.from_bus, "to": l.to_bus, "feeder": l.feeder_id,
                   "travel_time_h": l.travel_time_h, "poles": {str(c): n for c, n in l.poles_by_class.items()}}
                  for l in (net.lines[lid] for lid in sorted(net.lines))],
        "feeders": [{"id": f, "class_counts": {str(c): n for c, n in ds.class_counts[f].items()}}
                    for f in sorted(ds.class_counts, key=str)],
    }
    if ds.observed_damage:
        doc["observed_damage"] = [{"line": lid, "by_class": {str(c): n for c, n in rec.items()}}
                                  for lid, rec in sorted(ds.observed_damage.items())]
    if ds.notes:
        doc["notes"] = list(ds.notes)
    return doc


# -- bundled 33-bus case study -----------------------------------------------

def _paper_table(name: str, directory=None) -> list[dict]:
    if directory is None:
        text = resources.files("hilprank.data").joinpath("paper", name).read_text(encoding="utf-8")
    else:
        text = (Path(directory) / name).read_text(encoding="utf-8")
    return list(csv.DictReader(io.StringIO(text)))


def bundled_line_id(feeder: int, line: int) -> int:
    """Id of line ``line`` (the receiving bus number) of ``feeder`` in the bundled data."""
    return 100 * feeder + line


def import_paper_tables(directory=None, feeders: Iterable[int] = (1, 2, 3)) -> dict:
    """Assemble a dataset document from the per-table CSV layout.

    Expected files: ``classes.csv``, ``class_counts.csv``, ``poles.csv``,
    ``observed_damage.csv``, ``branches.csv`` and ``load_factors.csv``.
    Every feeder is an independent replica of the same 33-bus topology and
    load data, hung off one shared slack bus. Bus ``b`` of feeder ``f`` gets
    id ``100 * f + b`` and the line feeding it the same id. Line 1 of each
    feeder connects the slack bus to bus 1, which carries no load.
    """
    feeders = tuple(feeders)
    classes = _paper_table("classes.csv", directory)
    branches = _paper_table("branches.csv", directory)
    factors = {int(r["line"]): r for r in _paper_table("load_factors.csv", directory)}
    poles = {(int(r["feeder"]), int(r["line"])): r for r in _paper_table("poles.csv", directory)}
    damage = {(int(r["feeder"]), int(r["line"])): r for r in _paper_table("observed_damage.csv", directory)}
    counts = _paper_table("class_counts.csv", directory)
    class_ids = [int(c["class_id"]) for c in classes]

    upstream = {1: None}
    load = {1: 0.0}
    for r in branches:
        upstream[int(r["receiving_bus"])] = int(r["sending_bus"])
        load[int(r["receiving_bus"])] = float(r["load_kw"])

    doc = {
        "slack_bus": BUNDLED_SLACK_BUS,
        "classes": [{"id": int(c["class_id"]), "years": [float(c["years_lo"]), float(c["years_hi"])],
                     "p0": float(c["p0"]), "v_th": float(c["v_th"]), "v_max": float(c["v_max"])} for c in classes],
        "buses": [{"id": BUNDLED_SLACK_BUS, "load_kw": 0.0, "load_factor": 1.0, "voll": 0.0}],
        "lines": [],
        "observed_damage": [],
        "feeders": [],
        "notes": list(BUNDLED_NOTES),
    }
    for f in feeders:
        for b in sorted(upstream):
            lid = bundled_line_id(f, b)
            doc["buses"].append({"id": lid, "load_kw": load[b], "load_factor": float(factors[b]["load_factor"]),
                                 "voll": float(factors[b]["voll"])})
            inv = {str(c): int(poles[f, b][f"c{c}"]) for c in class_ids if int(poles[f, b][f"c{c}"])}
            hit = {str(c): int(damage[f, b][f"d{c}"]) for c in class_ids if int(damage[f, b][f"d{c}"])}
            bt = sum(hit.values())
            # repair time minus pole work is the crew travel component
            travel = min(max(round(float(damage[f, b]["t_rep_h"]) - 4.0 * bt, 6), 0.0), 1.0)
            doc["lines"].append({"id": lid, "from": BUNDLED_SLACK_BUS if upstream[b] is None
                                 else bundled_line_id(f, upstream[b]),
                                 "to": lid, "feeder": f, "travel_time_h": travel, "poles": inv})
            doc["observed_damage"].append({"line": lid, "by_class": hit})
        doc["feeders"].append({"id": f, "class_counts": {r["class_id"]: int(r["count"]) for r in counts
                                                         if int(r["feeder"]) == f}})
    return doc


def bundled_dataset_path() -> Path:
    return Path(str(resources.files("hilprank.data").joinpath(BUNDLED_DATASET)))


def load_bundled(feeders: Iterable[int] | None = None) -> Dataset:
    """The 33-bus, three-feeder case study, optionally restricted to some feeders."""
    if feeders is None:
        return load_dataset(bundled_dataset_path())
    return dataset_from_dict(import_paper_tables(feeders=feeders), "<bundled tables>")


# -- pipeline ----------------------------------------------------------------

def run_assessment(dataset: Dataset, config: ScenarioConfig = ScenarioConfig(),
                   observed: Mapping[int, Mapping[int, int]] | None = None) -> Assessment:
    """Fragility -> class damage -> line damage -> repair times -> values -> ranking.

    With ``damage_source="observed"`` the line damage comes from ``observed``
    (or the dataset's own records when ``observed`` is None); lines without a
    record count as undamaged. Class damage is still computed for reporting.
    """
    net = dataset.network
    params = RepairParams(config.t_rep_av_h)
    if config.damage_source == "observed":
        observed = dataset.observed_damage if observed is None else observed
        unknown = sorted(set(observed) - set(net.lines))
        if unknown:
            raise ValidationError(f"observed damage for unknown lines {unknown}")

    per_class = {}
    line_damage = {}
    for f in sorted(net.feeders, key=str):
        per_class[f] = class_damage(dataset.class_table, dataset.class_counts[f], config.v_real, config.rounding)
        for lid in sorted(lines_of_feeder(net, f)):
            if config.damage_source == "estimate":
                line_damage[lid] = estimate_line_damage(net, dataset.class_table, per_class[f], lid,
                                                        config.rounding, params)
            else:
                line_damage[lid] = ingest_observed_damage(net, lid, observed.get(lid, {}), params)

    meta = {"v_real": config.v_real, "rounding": config.rounding, "damage_source": config.damage_source,
            "t_rep_av_h": config.t_rep_av_h}
    assessment = value_network(net, {lid: d.t_rep_h for lid, d in line_damage.items()},
                               {lid: d.bt for lid, d in line_damage.items()}, config.mode, meta)
    assessment.class_damage = per_class
    assessment.line_damage = line_damage
    return assessment


@dataclass(frozen=True)
class SweepTable:
    """Damaged-pole counts per wind speed.

    Columns: ``v``, then for every feeder ``F<f>:R<c>`` (class damage),
    ``F<f>:total`` (sum over classes) and ``F<f>:lines`` (sum of per-line
    estimates), then network-wide ``total`` and ``lines``.
    """
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    def column(self, name: str) -> list:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def row_at(self, v: float) -> dict:
        for row in self.rows:
            if math.isclose(row[0], v, abs_tol=1e-9):
                return dict(zip(self.columns, row))
        raise KeyError(v)

    def to_csv(self, path):
        with _open_out(path) as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows([repr(float(row[0])), *row[1:]] for row in self.rows)


def sweep_speeds(v_min: float, v_max: float, step: float) -> list[float]:
    if not step > 0:
        raise InvalidRange(f"step must be > 0, got {step}")
    if not 0 <= v_min <= v_max:
        raise InvalidRange(f"need 0 <= v_min <= v_max, got {v_min}..{v_max}")
    count = int(math.floor((v_max - v_min) / step + 1e-9)) + 1
    return [round(v_min + k * step, 9) for k in range(count)]


def wind_sweep(dataset: Dataset, v_min: float, v_max: float, step: float,
               rounding: Rounding = "nearest") -> SweepTable:
    net = dataset.network
    feeders = sorted(net.feeders, key=str)
    columns = ["v"]
    for f in feeders:
        columns += [f"F{f}:R{c}" for c in dataset.class_table.ids] + [f"F{f}:total", f"F{f}:lines"]
    columns += ["total", "lines"]

    rows = []
    for v in sweep_speeds(v_min, v_max, step):
        row: list = [v]
        total = lines_total = 0
        for f in feeders:
            cd = class_damage(dataset.class_table, dataset.class_counts[f], v, rounding)
            f_lines = sum(estimate_line_damage(net, dataset.class_table, cd, lid, rounding).bt
                          for lid in lines_of_feeder(net, f))
            f_total = sum(d.b for d in cd)
            row += [d.b for d in cd] + [f_total, f_lines]
            total += f_total
            lines_total += f_lines
        rows.append(tuple(row + [total, lines_total]))
    return SweepTable(tuple(columns), tuple(rows))


# -- exports -----------------------------------------------------------------

def _open_out(path):
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _ranking_rows(assessment: Assessment) -> list[dict]:
    feeder_rank = {fv.feeder_id: fv.rank for fv in assessment.feeders}
    ordered = sorted(assessment.lines, key=lambda lv: (feeder_rank.get(lv.feeder_id, 0), lv.rank))
    return [{"line_id": lv.line_id, "feeder_id": lv.feeder_id, "damaged_poles": lv.damaged_poles,
             "t_rep_h": lv.t_rep_h, "v_dyn": lv.v_dyn, "v_line_dyn": lv.v_line_dyn,
             "rank": lv.rank, "tier": lv.tier} for lv in ordered]


def export_ranking(assessment: Assessment, path, format: Literal["csv", "json"] | None = None) -> Path:
    """Write the line ranking, best-ranked first within each feeder in feeder order."""
    path = Path(path)
    format = format or ("json" if path.suffix.lower() == ".json" else "csv")
    rows = _ranking_rows(assessment)
    with _open_out(path) as fh:
        if format == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(RANKING_COLUMNS)
            for r in rows:
                writer.writerow([repr(r[c]) if isinstance(r[c], float) else r[c] for c in RANKING_COLUMNS])
        elif format == "json":
            doc = {"metadata": assessment.metadata,
                   "feeders": [{"feeder_id": fv.feeder_id, "w_f": fv.w_f, "rank": fv.rank}
                               for fv in assessment.feeders],
                   "lines": rows}
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        else:
            raise ValueError(f"unknown export format {format!r}")
    return path


def read_ranking(path) -> list[dict]:
    """Parse a ranking written by :func:`export_ranking` (CSV or JSON)."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        return _read_json(path)["lines"]
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    out = []
    for r in rows:
        feeder = r["feeder_id"]
        out.append({"line_id": int(r["line_id"]), "feeder_id": int(feeder) if feeder.lstrip("-").isdigit() else feeder,
                    "damaged_poles": int(r["damaged_poles"]), "t_rep_h": float(r["t_rep_h"]),
                    "v_dyn": float(r["v_dyn"]), "v_line_dyn": float(r["v_line_dyn"]),
                    "rank": int(r["rank"]), "tier": r["tier"]})
    return out


def heatmap_dot(assessment: Assessment, net: Network) -> str:
    """DOT digraph of the network with lines coloured red/orange/green by tier."""
    out = ["digraph network {", "  rankdir=TB;", "  node [shape=circle, fontsize=10];"]
    for bus_id in sorted(net.buses):
        shape = ", shape=doublecircle" if bus_id == net.slack_bus else ""
        out.append(f'  "{bus_id}" [label="{bus_id}"{shape}];')
    for lid in net.order:
        line = net.lines[lid]
        lv = assessment.line(lid)
        out.append(f'  "{line.from_bus}" -> "{line.to_bus}" '
                   f'[color={TIER_COLORS[lv.tier]}, label="{lv.rank}", tooltip="line {lid}", penwidth=2];')
    out.append("}")
    return "\n".join(out) + "\n"


def export_heatmap(assessment: Assessment, net: Network, path) -> Path:
    path = Path(path)
    text = heatmap_dot(assessment, net)
    with _open_out(path) as fh:
        fh.write(text)
    return path


def write_dataset(ds_or_doc, path) -> Path:
    doc = dataset_to_dict(ds_or_doc) if isinstance(ds_or_doc, Dataset) else ds_or_doc
    path = Path(path)
    with _open_out(path) as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
    return path

