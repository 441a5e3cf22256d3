"""Exhaustive sweeps over (group, involution, orientation, ring) instances.

Each instance is decided twice: directly, by multiplying generators of the
symmetric span, and by the closed-form predicate in :mod:`anticomm.classifier`.
Records are sorted before they are emitted and carry no timing, so a report
is byte-identical across runs and across ``--jobs`` settings.  Wall-clock
figures go to a separate ``*.timing.json`` file.
"""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from .catalog import builtin_catalog, get_group
from .checker import check_anticommutative, check_lemma_suite
from .classifier import CharTwoRejected, ib3_diagnosis, restricted_case, theorem_predicate
from .group_ring import jordan, symmetric_generators
from .groups import Group, load_group_file
from .involutions import GroupInvolution, enumerate_involutions, inversion, identity_involution, make_involution
from .orientation import Orientation, enumerate_orientations, is_compatible, make_orientation
from .rings import FiniteRing, load_ring_file, ring_from_token

MODES = ("verify", "classify", "witness", "lemmas")
DEFAULT_MAX_ORDER = 16
HARD_MAX_ORDER = 32


class IncompatiblePair(ValueError):
    pass


@dataclass
class SweepConfig:
    max_order: int | None = DEFAULT_MAX_ORDER
    group_files: list[str] = field(default_factory=list)
    group_names: list[str] = field(default_factory=list)
    rings: list[str] = field(default_factory=lambda: ["z4"])
    mode: str = "verify"
    out: str | None = None
    fmt: str = "json"
    jobs: int = 1
    include_trivial_sigma: bool = False
    allow_order_32: bool = False

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if not self.rings:
            raise ValueError("at least one ring is required")
        if self.max_order is None and not self.group_files and not self.group_names:
            raise ValueError("at least one group source is required")
        cap = HARD_MAX_ORDER if self.allow_order_32 else DEFAULT_MAX_ORDER
        if self.max_order is not None and self.max_order > cap:
            raise ValueError(f"max order {self.max_order} exceeds cap {cap}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")


def resolve_groups(config: SweepConfig) -> list[Group]:
    cap = HARD_MAX_ORDER if config.allow_order_32 else DEFAULT_MAX_ORDER
    groups: list[Group] = []
    if config.max_order is not None:
        groups.extend(builtin_catalog(config.max_order))
    for name in config.group_names:
        groups.append(get_group(name))
    for path in config.group_files:
        G = load_group_file(path)
        if G.order > cap:
            raise ValueError(f"{path}: order {G.order} exceeds cap {cap}")
        groups.append(G)
    return groups


def resolve_ring(token: str) -> FiniteRing:
    """Ring token (``z4``, ``z4xz2``, ``dual-z4``) or path to a JSON table file."""
    if token.endswith(".json"):
        return load_ring_file(token)
    return ring_from_token(token)


def _ring_json_label(R: FiniteRing, values: Sequence[int]) -> list[str]:
    return [R.labels[v] for v in values]


def evaluate_instance(
    G: Group,
    R: FiniteRing,
    tau: GroupInvolution,
    sigma: Orientation,
    mode: str = "verify",
) -> dict[str, Any]:
    """Direct verdict, closed-form predicate and mode-specific extras for one instance."""
    rec: dict[str, Any] = {}
    gens = symmetric_generators(G, tau, sigma, R)
    verdict = check_anticommutative(gens)
    cls = theorem_predicate(G, tau, sigma, R)
    rec["direct"] = verdict.holds
    rec["predicate"] = cls.predicate
    rec["agreement"] = verdict.holds == cls.predicate
    rec["structure"] = cls.structure.tag
    if not verdict.holds:
        rec["witness"] = verdict.to_json()["witness"]
    if mode in ("classify", "witness", "lemmas"):
        rec["classification"] = cls.to_json(G)
        rec["restricted_case_alt"] = restricted_case(G, tau, sigma, R, literal=False)
        if cls.structure.tag not in ("IA",) and not tau.is_identity:
            rec["ib3"] = ib3_diagnosis(G, tau, sigma)
    if mode == "lemmas" and verdict.holds:
        report = check_lemma_suite(G, tau, sigma, R, gens, verdict)
        rec["lemmas"] = report.to_json()
        rec["lemmas_all_hold"] = report.all_hold
    return rec


def _task(args: tuple) -> list[dict[str, Any]]:
    gpos, G, rpos, token, mode, include_trivial = args
    R = resolve_ring(token)
    base = {"group": G.name, "group_order": G.order, "ring": token}
    out: list[dict[str, Any]] = []
    invs = enumerate_involutions(G)
    sigmas = enumerate_orientations(G, R, include_trivial=include_trivial)
    for i, tau in enumerate(invs):
        for j, sigma in enumerate(sigmas):
            if not is_compatible(tau, sigma):
                continue
            rec = dict(base)
            rec["_key"] = (gpos, rpos, i, j)
            rec["involution_index"] = i
            rec["involution"] = list(tau.map)
            rec["orientation_index"] = j
            rec["orientation"] = list(sigma.values)
            rec["orientation_labels"] = _ring_json_label(R, sigma.values)
            if sigma.is_trivial:
                rec["trivial_sigma"] = True
            if R.characteristic == 2:
                rec["rejected"] = "char 2"
            else:
                rec.update(evaluate_instance(G, R, tau, sigma, mode))
            out.append(rec)
    return out


def run_sweep(config: SweepConfig) -> tuple[dict[str, Any], list[dict[str, Any]], dict[str, Any]]:
    """Run every instance of the config; returns ``(summary, records, timing)``."""
    config.validate()
    groups = resolve_groups(config)
    for tok in config.rings:
        resolve_ring(tok)  # fail fast on bad tokens
    tasks = [
        (gpos, G, rpos, tok, config.mode, config.include_trivial_sigma)
        for gpos, G in enumerate(groups)
        for rpos, tok in enumerate(config.rings)
    ]
    t0 = time.perf_counter()
    timing: dict[str, Any] = {"tasks": {}}
    records: list[dict[str, Any]] = []
    if config.jobs == 1:
        for task in tasks:
            ts = time.perf_counter()
            records.extend(_task(task))
            timing["tasks"][f"{task[1].name}/{task[3]}"] = round(time.perf_counter() - ts, 4)
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for res in pool.map(_task, tasks, chunksize=1):
                records.extend(res)
    timing["total_seconds"] = round(time.perf_counter() - t0, 3)
    records.sort(key=lambda r: r["_key"])
    for r in records:
        del r["_key"]
    return summarize(records, config), records, timing


def summarize(records: Iterable[dict[str, Any]], config: SweepConfig | None = None) -> dict[str, Any]:
    n = holds = pred = rejected = lemma_fail = weak_changes = trivial = 0
    mismatches: list[dict[str, Any]] = []
    cases: Counter = Counter()
    restricted: Counter = Counter()
    ib3: Counter = Counter()
    for r in records:
        n += 1
        if r.get("rejected"):
            rejected += 1
            continue
        if r.get("trivial_sigma"):
            trivial += 1
        holds += r["direct"]
        pred += r["predicate"]
        cases[(r["structure"], "holds" if r["direct"] else "fails")] += 1
        if not r["agreement"] and not r.get("trivial_sigma"):
            mismatches.append(
                {k: r[k] for k in ("group", "ring", "involution_index", "orientation_index", "direct", "predicate", "structure")}
            )
        if r.get("lemmas_all_hold") is False:
            lemma_fail += 1
        cl = r.get("classification")
        if cl:
            restricted[str(cl["restricted_case"])] += 1
            weak_changes += cl["weak_placement"]["changes_verdict"]
        if "ib3" in r:
            ib3["realized" if r["ib3"]["realized"] else r["ib3"]["failed"]] += 1
    summary: dict[str, Any] = {
        "instances": n,
        "evaluated": n - rejected,
        "rejected_char2": rejected,
        "trivial_sigma": trivial,
        "direct_holds": holds,
        "predicate_true": pred,
        "mismatch_count": len(mismatches),
        "mismatches": mismatches,
        "cases": {f"{tag}/{state}": cases[(tag, state)] for tag, state in sorted(cases)},
    }
    if config is not None:
        summary["config"] = {
            "max_order": config.max_order,
            "groups": list(config.group_names),
            "group_files": [Path(p).name for p in config.group_files],
            "rings": list(config.rings),
            "mode": config.mode,
            "include_trivial_sigma": config.include_trivial_sigma,
        }
    if restricted:
        summary["restricted_case"] = dict(sorted(restricted.items()))
        summary["weak_placement_changes"] = weak_changes
    if ib3:
        summary["ib3"] = dict(sorted(ib3.items()))
    if config is not None and config.mode == "lemmas":
        summary["lemma_failures"] = lemma_fail
    return summary


def exit_status(summary: dict[str, Any]) -> int:
    if summary["mismatch_count"] or summary.get("lemma_failures"):
        return 2
    return 0


def dumps_report(summary: dict[str, Any], records: list[dict[str, Any]]) -> str:
    return json.dumps({"summary": summary, "records": records}, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def _flatten(d: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v, sort_keys=True, ensure_ascii=False)
        else:
            out[key] = v
    return out


def dumps_csv(records: list[dict[str, Any]]) -> str:
    flat = [_flatten(r) for r in records]
    headers: list[str] = []
    seen = set()
    for row in flat:
        for k in row:
            if k not in seen:
                seen.add(k)
                headers.append(k)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=headers, lineterminator="\n")
    w.writeheader()
    for row in flat:
        w.writerow(row)
    return buf.getvalue()


def write_report(config: SweepConfig, summary: dict, records: list[dict], timing: dict) -> None:
    if config.out is None:
        return
    out = Path(config.out)
    try:
        if config.fmt == "json":
            out.write_text(dumps_report(summary, records), encoding="utf-8")
        else:
            out.write_text(dumps_csv(records), encoding="utf-8")
            out.with_suffix(out.suffix + ".summary.json").write_text(
                json.dumps(summary, sort_keys=True, indent=1) + "\n", encoding="utf-8"
            )
        out.with_suffix(out.suffix + ".timing.json").write_text(json.dumps(timing, indent=1) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"{out}: {exc.strerror or exc}") from exc


# single-instance inspection -------------------------------------------------


def _resolve_group(text: str) -> Group:
    if text.endswith(".json") or Path(text).is_file():
        return load_group_file(text)
    return get_group(text)


def _parse_index_or_list(text: str) -> int | list:
    text = text.strip()
    if text.lstrip("-").isdigit():
        return int(text)
    if text.startswith("["):
        return json.loads(text)
    return [p.strip() for p in text.split(",")]


def resolve_involution(G: Group, text: str) -> GroupInvolution:
    low = text.strip().lower()
    if low in ("id", "identity"):
        return identity_involution(G)
    if low in ("inv", "inversion"):
        return inversion(G)
    val = _parse_index_or_list(text)
    if isinstance(val, int):
        invs = enumerate_involutions(G)
        if not 0 <= val < len(invs):
            raise ValueError(f"involution index {val} out of range (0..{len(invs) - 1})")
        return invs[val]
    return make_involution(G, [_element(G, v) for v in val])


def _element(G: Group, v) -> int:
    if isinstance(v, int):
        return v
    v = v.strip()
    return G.names.index(v) if v in G.names else int(v)


def resolve_orientation(G: Group, R: FiniteRing, text: str) -> Orientation:
    val = _parse_index_or_list(text)
    if isinstance(val, int):
        sigmas = enumerate_orientations(G, R)
        if not sigmas:
            raise ValueError(f"{G.name} has no nontrivial orientation into U({R.name})")
        if not 0 <= val < len(sigmas):
            raise ValueError(f"orientation index {val} out of range (0..{len(sigmas) - 1})")
        return sigmas[val]
    if any(isinstance(v, str) and "=" in v for v in val):
        return make_orientation(G, R, _extend_from_generators(G, R, val))
    return make_orientation(G, R, [_ring_value(R, v) for v in val])


def _ring_value(R: FiniteRing, v) -> int:
    if isinstance(v, int):
        return v
    v = v.strip()
    return R.index_of(v) if v in R.labels else int(v)


def _extend_from_generators(G: Group, R: FiniteRing, val: list) -> list[int]:
    """Accept ``name=value`` pairs for generators and extend multiplicatively."""
    assigned: dict[int, int] = {}
    for item in val:
        if not isinstance(item, str) or "=" not in item:
            raise ValueError("orientation needs one value per element or name=value pairs")
        name, v = item.split("=", 1)
        x = G.names.index(name.strip())
        assigned[x] = _ring_value(R, v)
    values: dict[int, int] = {G.identity: R.one}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g, u in assigned.items():
                y = G.mul(x, g)
                if y not in values:
                    values[y] = R.mul[values[x]][u]
                    nxt.append(y)
        frontier = nxt
    if len(values) != G.order:
        raise ValueError("given generators do not generate the group")
    return [values[x] for x in G.elements]


def explain_instance(group: str | Group, ring: str | FiniteRing, involution: str, orientation: str) -> dict[str, Any]:
    """Everything about one instance: generators, Jordan table, case, witness."""
    G = group if isinstance(group, Group) else _resolve_group(group)
    R = ring if isinstance(ring, FiniteRing) else resolve_ring(ring)
    tau = resolve_involution(G, involution)
    sigma = resolve_orientation(G, R, orientation)
    if not is_compatible(tau, sigma):
        raise IncompatiblePair(f"{sigma.describe()} is not compatible with {tau.describe()}")
    if R.characteristic == 2:
        raise CharTwoRejected("char(R) = 2")
    gens = symmetric_generators(G, tau, sigma, R)
    labelled = gens.labelled()
    table = []
    for i, (la, a) in enumerate(labelled):
        for lb, b in labelled[i:]:
            table.append({"a": str(a), "b": str(b), "jordan": str(jordan(a, b))})
    verdict = check_anticommutative(gens)
    cls = theorem_predicate(G, tau, sigma, R)
    detail: dict[str, Any] = {
        "group": G.name,
        "ring": R.name,
        "involution": tau.describe(),
        "orientation": sigma.describe(),
        "kernel": [G.names[x] for x in sigma.kernel],
        "subgroup_C": [G.names[x] for x in sigma.subgroup_C],
        "symmetric_set": [G.names[x] for x in gens.g_star],
        "generators": {
            "2S1": [str(g) for g in gens.s1_doubled],
            "S2": [str(g) for g in gens.s2],
            "S3": [str(g) for g in gens.s3],
        },
        "jordan_table": table,
        "direct": verdict.to_json(),
        "classification": cls.to_json(G),
        "agreement": verdict.holds == cls.predicate,
    }
    if verdict.holds:
        detail["lemmas"] = check_lemma_suite(G, tau, sigma, R, gens, verdict).to_json()
    return detail


def format_explanation(d: dict[str, Any]) -> str:
    lines = [
        f"group {d['group']}  ring {d['ring']}  involution {d['involution']}  orientation {d['orientation']}",
        f"N = {{{', '.join(d['kernel'])}}}   C = {{{', '.join(d['subgroup_C'])}}}   G_* = {{{', '.join(d['symmetric_set'])}}}",
        "generators:",
    ]
    for fam, gens in d["generators"].items():
        lines.append(f"  {fam:4s} " + ("; ".join(gens) if gens else "(none)"))
    lines.append("jordan products:")
    for row in d["jordan_table"]:
        lines.append(f"  ({row['a']}) o ({row['b']}) = {row['jordan']}")
    cls = d["classification"]
    st = cls["structure"]
    where = "".join(f" {k}={st[k]}" for k in ("s", "t") if k in st)
    lines.append(f"direct verdict: {'anticommutative' if d['direct']['holds'] else 'NOT anticommutative'}")
    if not d["direct"]["holds"]:
        w = d["direct"]["witness"]
        lines.append(f"  witness: ({w['a']}) o ({w['b']}) = {w['jordan']}")
    lines.append(f"case: {st['tag']}{where}   ring conditions: {cls['ring_conditions']}")
    lines.append(f"predicate: {cls['predicate']}   restricted case: {cls['restricted_case']}   agreement: {d['agreement']}")
    return "\n".join(lines)
