"""Rewrite the JSON files in this directory from the built-in corpus.

Run from anywhere: ``python3 workspace/regenerate.py``.
"""

import json
import os

from isokit import catalog as C
from isokit import corpus
from isokit.fingroup import inn
from isokit.io import structure_to_json, theory_to_json
from isokit.phl import group_theory
from isokit.tj import group_structure

HERE = os.path.dirname(os.path.abspath(__file__))

GROUPS = {
    "z2": C.cyclic(2), "z3": C.cyclic(3), "z4": C.cyclic(4), "z6": C.cyclic(6),
    "z7": C.cyclic(7), "s3": C.symmetric(3), "d4": C.dihedral(4),
    "v4": C.direct_product(C.cyclic(2), C.cyclic(2)),
}
CATEGORIES = {
    "terminal": C.terminal(), "discrete2": C.discrete(2), "discrete3": C.discrete(3),
    "arrow": C.arrow(), "parallel_pair": C.parallel_pair(), "cospan": C.cospan(),
    "square": C.commutative_square(), "bz2": C.one_object(C.cyclic(2)),
    "bz3": C.one_object(C.cyclic(3)), "bs3": C.one_object(C.symmetric(3)),
}


def write(name, doc):
    with open(os.path.join(HERE, name), "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True, ensure_ascii=False)
        fh.write("\n")


def group_file(G):
    for key, H in GROUPS.items():
        if H.names == G.names and H.mul == G.mul:
            return f"{key}.json"
    raise KeyError(G.name)


def category_file(J):
    for key, K in CATEGORIES.items():
        if K.to_json() == J.to_json():
            return f"{key}.json"
    raise KeyError(repr(J))


def presheaf_doc(F):
    J = F.base
    return {
        "category": category_file(J),
        "on_objects": {o: group_file(F.at(o)) for o in J.objects},
        "on_morphisms": {m.name: F.arrow(m.name).as_names() for m in J.morphisms
                         if m.name != J.identity(m.dom)},
    }


def main():
    for key, G in GROUPS.items():
        write(f"{key}.json", G.to_json())
    for key, J in CATEGORIES.items():
        write(f"{key}.json", J.to_json())
    write("broken_cat.json", {
        "objects": ["*"],
        "morphisms": [{"name": n, "dom": "*", "cod": "*"} for n in ("id", "a", "b")],
        "identities": {"*": "id"},
        "composition": [["id", "id", "id"], ["id", "a", "a"], ["id", "b", "b"],
                        ["a", "id", "a"], ["b", "id", "b"],
                        ["a", "a", "b"], ["a", "b", "a"], ["b", "a", "a"], ["b", "b", "a"]],
    })
    for name, F in corpus.presheaf_corpus(extra=True).items():
        write(f"{name}.json", presheaf_doc(F))
    s3 = GROUPS["s3"]
    write("terminal_s3.json", {"category": "terminal.json", "on_objects": {"*": "s3.json"},
                               "on_morphisms": {}})
    write("terminal_z3.json", {"category": "terminal.json", "on_objects": {"*": "z3.json"},
                               "on_morphisms": {}})
    write("nat_z3_inversion.json", {"presheaf": "terminal_z3.json",
                                    "components": {"*": C.inversion(GROUPS["z3"]).as_names()}})
    write("nat_s3_inn123.json", {"presheaf": "terminal_s3.json",
                                 "components": {"*": inn(s3, "(123)").as_names()}})
    write("nat_bz2_z3_inversion.json", {"presheaf": "bz2_z3_inversion.json",
                                        "components": {"*": C.inversion(GROUPS["z3"]).as_names()}})
    write("groups_theory.json", theory_to_json(group_theory()))
    z3 = structure_to_json(group_structure(GROUPS["z3"]))
    write("z3_structure.json", z3)
    broken = json.loads(json.dumps(z3))
    broken["funs"]["m"] = [row if row[:2] != ["1", "1"] else ["1", "1", "0"] for row in broken["funs"]["m"]]
    write("z3_broken_structure.json", broken)
    write("term_bz2_z3.json", {"presheaf": "bz2_z3_inversion.json", "x": "X@*",
                               "term": "(alpha 1 (m@* x (alpha 1 (inv@* c:1))))"})
    write("term_arrow_z2_s3.json", {"presheaf": "arrow_z2_s3.json", "x": "X@i",
                                    "term": "(m@j (alpha f (m@i x c:1)) c:\"(123)\")"})


if __name__ == "__main__":
    main()
