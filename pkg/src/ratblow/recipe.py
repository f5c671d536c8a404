"""Construction recipes: the JSON file format that describes a surface
build, its chains, and the expected blow-down answers.

A recipe is a plain dict (usually read from a ``.json`` file) with fields

* ``base``: always "P2";
* ``curves``: plane curves given by degree, or curves given by an explicit
  class vector over the basis after ``after`` blow-ups (default 0) plus a
  node budget;
* ``blowups``: the ordered centers, each naming the curves it lies on and
  optionally the curve whose node it hits;
* ``chains``: named ordered curve lists;
* ``blowdown``: which chains get rational balls glued in and which are
  only excised;
* ``expect``: optional expected invariants to compare against.

See FORMAT.md in the repository root for the field-by-field reference.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import blowdown as bd
from .blowdown import BlowdownConfig, ChainSpec
from .surface import CenterSpec, MarkedSurface, SurfaceError, projective_plane
from .zlinalg import AbelianGroup


class RecipeError(ValueError):
    """Malformed recipe; the message carries field diagnostics."""


def _as_int(x, where):
    if isinstance(x, bool):
        raise RecipeError("%s: expected integer, got boolean" % where)
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            pass
    raise RecipeError("%s: expected integer, got %r" % (where, x))


@dataclass(frozen=True)
class Recipe:
    """A structurally validated recipe; ``raw`` is the normalized dict."""

    raw: dict


def load_recipe(source) -> Recipe:
    """Load and structurally validate a recipe from a dict, path or JSON text."""
    if isinstance(source, Recipe):
        return source
    if isinstance(source, dict):
        data = source
    else:
        text = source
        if "\n" not in str(source) and str(source).endswith(".json"):
            try:
                with open(source, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise RecipeError("cannot read %s: %s" % (source, exc)) from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RecipeError("invalid JSON: %s" % exc) from exc
    if not isinstance(data, dict):
        raise RecipeError("recipe must be a JSON object")
    if data.get("base", "P2") != "P2":
        raise RecipeError("base: only \"P2\" is supported")

    norm = {"base": "P2", "curves": [], "blowups": []}
    names = set()
    for i, entry in enumerate(data.get("curves", [])):
        where = "curves[%d]" % i
        if not isinstance(entry, dict) or "name" not in entry:
            raise RecipeError("%s: needs a name" % where)
        name = entry["name"]
        if name in names:
            raise RecipeError("%s: duplicate curve name %r" % (where, name))
        names.add(name)
        out = {"name": name}
        if "degree" in entry:
            out["degree"] = _as_int(entry["degree"], where + ".degree")
            if "after" in entry and _as_int(entry["after"], where) != 0:
                raise RecipeError("%s: degree curves must be added before "
                                  "blow-ups" % where)
        elif "class" in entry:
            if not isinstance(entry["class"], list):
                raise RecipeError("%s.class: expected a list" % where)
            out["class"] = [_as_int(x, where + ".class") for x in entry["class"]]
            out["budget"] = _as_int(entry.get("budget", 0), where + ".budget")
            out["after"] = _as_int(entry.get("after", 0), where + ".after")
            if len(out["class"]) != 1 + out["after"]:
                raise RecipeError("%s: class length %d does not match "
                                  "after=%d (expected %d entries)"
                                  % (where, len(out["class"]), out["after"],
                                     1 + out["after"]))
        else:
            raise RecipeError("%s: needs degree or class" % where)
        norm["curves"].append(out)

    labels = set()
    for i, entry in enumerate(data.get("blowups", [])):
        where = "blowups[%d]" % i
        if not isinstance(entry, dict) or "label" not in entry:
            raise RecipeError("%s: needs a label" % where)
        label = entry["label"]
        if label in labels or label in names:
            raise RecipeError("%s: duplicate label %r" % (where, label))
        labels.add(label)
        on = entry.get("on", [])
        if not isinstance(on, list):
            raise RecipeError("%s.on: expected a list of curve names" % where)
        out = {"label": label, "on": list(on)}
        if entry.get("node_of") is not None:
            out["node_of"] = entry["node_of"]
        norm["blowups"].append(out)
        names.add(label)

    chain_names = set()
    if "chains" in data:
        norm["chains"] = []
        for i, entry in enumerate(data["chains"]):
            where = "chains[%d]" % i
            if not isinstance(entry, dict) or "name" not in entry \
                    or not isinstance(entry.get("curves"), list):
                raise RecipeError("%s: needs name and curves" % where)
            if entry["name"] in chain_names:
                raise RecipeError("%s: duplicate chain %r" % (where, entry["name"]))
            chain_names.add(entry["name"])
            norm["chains"].append({"name": entry["name"],
                                   "curves": list(entry["curves"])})
    if "blowdown" in data:
        block = data["blowdown"]
        if not isinstance(block, dict):
            raise RecipeError("blowdown: expected an object")
        for key in ("blowdown", "excised"):
            for n in block.get(key, []):
                if n not in chain_names:
                    raise RecipeError("blowdown.%s: unknown chain %r" % (key, n))
        norm["blowdown"] = {"blowdown": list(block.get("blowdown", [])),
                            "excised": list(block.get("excised", []))}
    if "expect" in data:
        if not isinstance(data["expect"], dict):
            raise RecipeError("expect: expected an object")
        norm["expect"] = data["expect"]
    return Recipe(norm)


@dataclass(frozen=True)
class BuiltRecipe:
    """A recipe executed into an actual surface plus its chain data."""

    recipe: Recipe
    surface: MarkedSurface
    chains: tuple
    blowdown_names: tuple
    excised_names: tuple

    def surface_at(self, n_blowups: int) -> MarkedSurface:
        """Replay the recipe up to (and including) the n-th blow-up."""
        return _execute(self.recipe, stop_after=n_blowups)

    def config(self) -> BlowdownConfig:
        by_name = {c.name: c for c in self.chains}
        return BlowdownConfig(
            self.surface,
            tuple(by_name[n] for n in self.blowdown_names),
            tuple(by_name[n] for n in self.excised_names))


def _execute(recipe: Recipe, stop_after=None) -> MarkedSurface:
    raw = recipe.raw
    s = projective_plane()
    pending = {}
    for entry in raw["curves"]:
        pending.setdefault(entry.get("after", 0), []).append(entry)

    def flush(n):
        nonlocal s
        for entry in pending.get(n, []):
            try:
                if "degree" in entry:
                    s = s.add_plane_curve(entry["name"], entry["degree"])
                else:
                    s = s.add_class_curve(entry["name"], entry["class"],
                                          entry["budget"])
            except SurfaceError as exc:
                raise RecipeError("curve %r: %s" % (entry["name"], exc)) from exc

    flush(0)
    for i, entry in enumerate(raw["blowups"]):
        if stop_after is not None and i >= stop_after:
            break
        try:
            s = s.blow_up(CenterSpec(label=entry["label"],
                                     on=tuple(entry["on"]),
                                     node_of=entry.get("node_of")))
        except SurfaceError as exc:
            raise RecipeError("blowups[%d] (%s): %s"
                              % (i, entry["label"], exc)) from exc
        flush(i + 1)
    late = [n for n in pending if n > len(raw["blowups"])]
    if late and stop_after is None:
        raise RecipeError("curves scheduled after %d blow-ups, only %d given"
                          % (max(late), len(raw["blowups"])))
    return s


def build_recipe(recipe: Recipe) -> BuiltRecipe:
    recipe = load_recipe(recipe)
    s = _execute(recipe)
    chains = tuple(ChainSpec(c["name"], tuple(c["curves"]))
                   for c in recipe.raw.get("chains", []))
    for c in chains:
        for name in c.curves:
            if not s.has_curve(name):
                raise RecipeError("chain %s: unknown curve %r" % (c.name, name))
    block = recipe.raw.get("blowdown")
    if block is None:
        blow, exc = tuple(c.name for c in chains), ()
    else:
        blow, exc = tuple(block["blowdown"]), tuple(block["excised"])
    return BuiltRecipe(recipe=recipe, surface=s, chains=chains,
                       blowdown_names=blow, excised_names=exc)


@dataclass(frozen=True)
class RunReport:
    """Result of executing a recipe: computed values and expect checks."""

    items: tuple
    values: dict

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.items)

    def failures(self):
        return tuple(name for name, ok, _ in self.items if not ok)

    def to_json_dict(self):
        return {"passed": self.passed,
                "items": [{"name": n, "passed": ok, "detail": d}
                          for n, ok, d in self.items],
                "values": dict(self.values)}

    def to_text(self, quiet=False):
        lines = []
        for name, ok, detail in self.items:
            if quiet and ok:
                continue
            lines.append("[%s] %s%s" % ("PASS" if ok else "FAIL", name,
                                        (": " + detail) if detail else ""))
        if not quiet:
            for key in sorted(self.values):
                lines.append("%s = %s" % (key, self.values[key]))
        lines.append("verdict: %s" % ("ok" if self.passed else
                                      "FAILED (%s)" % ", ".join(self.failures())))
        return "\n".join(lines)


def run_recipe(source) -> RunReport:
    """Build a recipe, validate its chains, compute blow-down data, and
    compare against the expect block."""
    built = build_recipe(load_recipe(source))
    s = built.surface
    items = []
    values = {}

    def check(name, ok, detail=""):
        items.append((name, bool(ok), str(detail)))

    e, sigma, b2, k2 = s.invariants()
    values.update({"surface.e": e, "surface.sigma": sigma,
                   "surface.b2": b2, "surface.k2": k2})

    cfg = built.config()
    used = cfg.all_chains()
    ok_chains = True
    for c in used:
        try:
            w = bd.validate_chain(s, c)
            check("chain %s is a Wahl chain" % c.name, True,
                  "(n,a)=(%d,%d)" % (w.n, w.a))
            values["chain.%s" % c.name] = [w.n, w.a]
        except bd.ChainError as exc:
            check("chain %s is a Wahl chain" % c.name, False, exc)
            ok_chains = False
    if not ok_chains:
        return RunReport(tuple(items), values)
    verdict = bd.chains_disjoint(s, used)
    check("chains disjoint", bool(verdict),
          "" if verdict else "%r" % (verdict.violation,))
    if not verdict:
        return RunReport(tuple(items), values)

    inv = bd.blowdown_invariants(s, cfg.blowdown_chains) \
        if cfg.blowdown_chains else None
    if inv is not None:
        values.update({"e": inv.e, "sigma": inv.sigma, "b2": inv.b2,
                       "b2_plus": inv.b2_plus, "k2": inv.k2,
                       "chi_h": inv.chi_h})
    group = bd.h1(cfg)
    values["h1"] = {"free_rank": group.free_rank,
                    "torsion": list(group.torsion)}
    values["h1_pretty"] = str(group)

    expect = built.recipe.raw.get("expect", {})
    for key in sorted(expect):
        if key == "h1":
            want = expect[key]
            got = values["h1"]
            ok = (_as_int(want.get("free_rank", 0), "expect.h1") == got["free_rank"]
                  and [_as_int(t, "expect.h1") for t in want.get("torsion", [])]
                  == got["torsion"])
            check("expect h1", ok, "want %s, got %s" % (want, got))
        elif key in ("e", "sigma", "b2", "b2_plus", "k2", "chi_h"):
            want = _as_int(expect[key], "expect.%s" % key)
            got = values.get(key)
            check("expect %s" % key, got == want, "want %d, got %s" % (want, got))
        else:
            check("expect %s" % key, False, "unknown expectation key")
    return RunReport(tuple(items), values)


# ----------------------------------------------------------------------
# Serializing found constructions.
# ----------------------------------------------------------------------

def recipe_from_solution(pi, ca) -> dict:
    """Self-contained recipe reproducing a solved construction."""
    curves = [{"name": n, "degree": 1} for n in ("L1", "L2", "L3", "A")]
    curves.append({"name": "B", "degree": 2})
    fiber = [3] + [-1] * 9
    for name in ("F1", "F2", "F3"):
        curves.append({"name": name, "after": 9, "class": list(fiber),
                       "budget": 1})
    blowups = []
    for t in pi.towers:
        for c in t.centers():
            blowups.append({"label": c.label, "on": list(c.on)})
    for c in ca.centers():
        entry = {"label": c.label, "on": list(c.on)}
        if c.node_of is not None:
            entry["node_of"] = c.node_of
        blowups.append(entry)
    return {
        "base": "P2",
        "curves": curves,
        "blowups": blowups,
        "chains": [{"name": ch.name, "curves": list(ch.curves)}
                   for ch in ca.chains],
        "blowdown": {"blowdown": [ch.name for ch in ca.chains], "excised": []},
        "expect": {"e": 9, "sigma": -5, "b2": 7, "b2_plus": 1, "k2": 3,
                   "chi_h": 1, "h1": {"free_rank": 0, "torsion": [2]}},
    }


def packaged_canonical_assignment() -> dict:
    """The golden reconstruction shipped with the package."""
    text = resources.files("ratblow").joinpath(
        "data/canonical_assignment.json").read_text(encoding="utf-8")
    return load_recipe(text).raw
