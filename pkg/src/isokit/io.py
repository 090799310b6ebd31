"""JSON documents for categories, groups, presheaves, natural transformations,
theories, structures and terms.

Cross-references are either inline documents or paths relative to the
referring file. Any document may carry ``{"catalog": NAME}`` instead of its
tables to name a built-in object (``Z4``, ``S3``, ``D4``, ``BZ2``,
``arrow``, ``groups``, ...). Where a group or category is expected, a bare
catalog name also works in place of a path.
"""

import json
import os
import re

from isokit import catalog
from isokit.errors import InputError, ParseError
from isokit.fincat import validate_category
from isokit.fingroup import FinGroup, GroupHom
from isokit.phl import FunSymbol, PartialStructure, QuasiEquationalTheory, Signature, group_theory, parse_sequent
from isokit.presheaf import validate_nat_trans, validate_presheaf

KINDS = ("category", "group", "presheaf", "nat-trans", "theory", "structure", "term")


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def detect_kind(doc):
    if not isinstance(doc, dict):
        raise ParseError("a document must be a JSON object")
    if "kind" in doc:
        if doc["kind"] not in KINDS:
            raise ParseError(f"unknown document kind {doc['kind']!r}")
        return doc["kind"]
    keys = set(doc)
    if "catalog" in keys:
        name = doc["catalog"]
        if name in _CATEGORY_CATALOG or _BG.fullmatch(str(name)):
            return "category"
        if name in ("groups",):
            return "theory"
        return "group"
    if {"objects", "morphisms"} <= keys:
        return "category"
    if {"elements", "mul"} <= keys:
        return "group"
    if "on_objects" in keys:
        return "presheaf"
    if "components" in keys:
        return "nat-trans"
    if "carriers" in keys:
        return "structure"
    if "sorts" in keys:
        return "theory"
    if "term" in keys:
        return "term"
    raise ParseError("cannot tell what kind of document this is; add a \"kind\" field")


_GROUP = re.compile(r"([ZSAD])(\d+)")
_BG = re.compile(r"B([ZSAD]\d+)")
_CATEGORY_CATALOG = {
    "terminal": catalog.terminal, "arrow": catalog.arrow, "parallel_pair": catalog.parallel_pair,
    "cospan": catalog.cospan, "square": catalog.commutative_square,
}


def catalog_group(name):
    if name == "1":
        return catalog.trivial()
    m = _GROUP.fullmatch(str(name))
    if not m:
        raise InputError(f"unknown catalog group {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if n < 1 or (kind != "Z" and n > 6):
        raise InputError(f"catalog group {name} is out of range")
    return {"Z": catalog.cyclic, "S": catalog.symmetric, "A": catalog.alternating,
            "D": catalog.dihedral}[kind](n)


def catalog_category(name):
    if name in _CATEGORY_CATALOG:
        return _CATEGORY_CATALOG[name]()
    m = re.fullmatch(r"discrete(\d+)", str(name))
    if m:
        return catalog.discrete(int(m.group(1)))
    m = _BG.fullmatch(str(name))
    if m:
        return catalog.one_object(catalog_group(m.group(1)))
    raise InputError(f"unknown catalog category {name!r}")


class Loader:
    """Reads documents, resolving relative references and sharing objects
    loaded from the same file."""

    def __init__(self):
        self._cache = {}

    def read_json(self, path):
        try:
            with open(path, encoding="utf-8") as fh:
                return json.load(fh)
        except FileNotFoundError:
            raise InputError(f"no such file: {path}") from None
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})") from None

    def _resolve(self, ref, base_dir, kind):
        if isinstance(ref, str):
            path = os.path.abspath(os.path.join(base_dir, ref))
            if kind in ("group", "category") and not os.path.exists(path) and not ref.endswith(".json"):
                return self.load(ref, kind)
            key = (kind, path)
            if key not in self._cache:
                self._cache[key] = self.build(kind, self.read_json(path), os.path.dirname(path))
            return self._cache[key]
        if isinstance(ref, dict):
            return self.build(kind, ref, base_dir)
        raise ParseError(f"bad {kind} reference {ref!r}")

    def load(self, path, kind=None):
        """Load a document; a group or category may also be a bare catalog name."""
        if kind in ("group", "category") and not os.path.exists(path) and not path.endswith(".json"):
            key = (kind, "catalog:" + path)
            if key not in self._cache:
                self._cache[key] = (catalog_group if kind == "group" else catalog_category)(path)
            return self._cache[key]
        path = os.path.abspath(path)
        doc = self.read_json(path)
        kind = kind or detect_kind(doc)
        key = (kind, path)
        if key not in self._cache:
            self._cache[key] = self.build(kind, doc, os.path.dirname(path))
        return self._cache[key]

    def build(self, kind, doc, base_dir="."):
        if not isinstance(doc, dict):
            raise ParseError(f"{kind} document must be a JSON object")
        try:
            return getattr(self, "_" + kind.replace("-", "_"))(doc, base_dir)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed {kind} document: {exc!r}") from None

    # ------------------------------------------------------------ builders

    def _category(self, doc, base_dir):
        if "catalog" in doc:
            return catalog_category(doc["catalog"])
        morphisms = [(m["name"], m["dom"], m["cod"]) for m in doc["morphisms"]]
        composition = [tuple(c) for c in doc["composition"]]
        if any(len(c) != 3 for c in composition):
            raise ParseError("composition entries must be [g, f, g∘f]")
        return validate_category(doc["objects"], morphisms, doc["identities"], composition)

    def _group(self, doc, base_dir):
        if "catalog" in doc:
            return catalog_group(doc["catalog"])
        return FinGroup.from_table(doc["elements"], doc["mul"], unit=doc.get("unit"),
                                   name=doc.get("name", ""))

    def _presheaf(self, doc, base_dir):
        J = self._resolve(doc["category"], base_dir, "category")
        groups = {}
        for o, ref in doc["on_objects"].items():
            G = self._resolve(ref, base_dir, "group")
            if not G.name:
                G.name = str(o)
            groups[o] = G
        homs = {}
        on_m = dict(doc.get("on_morphisms", {}))
        for m in J.morphisms:
            if m.name not in on_m and m.name == J.identity(m.dom) and m.dom in groups:
                G = groups[m.dom]
                homs[m.name] = GroupHom(G, G, tuple(range(G.order)))
                continue
            if m.name not in on_m:
                continue
            if m.dom not in groups or m.cod not in groups:
                raise InputError(f"morphism {m.name} joins objects without groups")
            homs[m.name] = GroupHom.from_names(groups[m.dom], groups[m.cod], on_m[m.name])
        extra = set(on_m) - {m.name for m in J.morphisms}
        if extra:
            raise InputError(f"maps given for unknown morphisms {sorted(extra)}")
        return validate_presheaf(J, groups, homs, name=doc.get("name", ""))

    def _nat_trans(self, doc, base_dir):
        src = self._resolve(doc.get("source", doc.get("presheaf")), base_dir, "presheaf")
        tgt = self._resolve(doc["target"], base_dir, "presheaf") if "target" in doc else src
        comps = {}
        for o in src.base.objects:
            if o not in doc["components"]:
                raise InputError(f"no component at object {o!r}")
            comps[o] = GroupHom.from_names(src.at(o), tgt.at(o), doc["components"][o])
        return validate_nat_trans(src, tgt, comps)

    def _theory(self, doc, base_dir):
        if "catalog" in doc:
            if doc["catalog"] != "groups":
                raise InputError(f"unknown catalog theory {doc['catalog']!r}")
            return group_theory()
        funs = [FunSymbol(f["name"], tuple(f.get("args", ())), f["result"]) for f in doc.get("funs", [])]
        sig = Signature(tuple(doc["sorts"]), tuple(funs))
        axioms = []
        for k, ax in enumerate(doc.get("axioms", [])):
            ctx = ax.get("context", [])
            ctx = list(ctx.items()) if isinstance(ctx, dict) else [tuple(c) for c in ctx]
            axioms.append(parse_sequent(sig, ctx, ax.get("lhs", []), ax.get("rhs", []),
                                        ax.get("name", f"axiom{k}")))
        return QuasiEquationalTheory(sig, tuple(axioms))

    def _structure(self, doc, base_dir, signature=None):
        if signature is None:
            if "theory" not in doc:
                raise InputError("a structure needs a theory (pass one or add a \"theory\" field)")
            signature = self._resolve(doc["theory"], base_dir, "theory").signature
        return structure_from_json(doc, signature)

    def structure(self, path, signature):
        path = os.path.abspath(path)
        return structure_from_json(self.read_json(path), signature)

    def _term(self, doc, base_dir):
        out = {"term": doc["term"]}
        if "presheaf" in doc:
            out["presheaf"] = self._resolve(doc["presheaf"], base_dir, "presheaf")
        if "x" in doc:
            out["x"] = doc["x"]
        return out


def structure_from_json(doc, signature):
    funs = {}
    for name, rows in doc.get("funs", {}).items():
        table = {}
        for row in rows:
            if not isinstance(row, list) or not row:
                raise ParseError(f"{name}: rows must be [args..., value]")
            table[tuple(row[:-1])] = row[-1]
        funs[name] = table
    return PartialStructure(signature, doc["carriers"], funs)


def structure_to_json(S):
    return {
        "carriers": {s: list(S.carriers[s]) for s in S.signature.sorts},
        "funs": {f.name: [list(k) + [v] for k, v in S.funs[f.name].items()]
                 for f in S.signature.funs},
    }


def theory_to_json(th):
    from isokit.sexpr import format_term

    def formula(phi):
        return [format_term(a) if a is b else [format_term(a), format_term(b)]
                for a, b in phi.equations]

    return {
        "sorts": list(th.signature.sorts),
        "funs": [{"name": f.name, "args": list(f.args), "result": f.result} for f in th.signature.funs],
        "axioms": [{"name": a.name, "context": [list(c) for c in a.context],
                    "lhs": formula(a.lhs), "rhs": formula(a.rhs)} for a in th.axioms],
    }
