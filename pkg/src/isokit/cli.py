"""Command-line interface: ``isokit <command> ...``.

Every command prints one deterministic JSON document on standard output.
Exit status 1 signals a validation failure (details as JSON on standard
error); exit status 2 a parse, schema or input error.
"""

import argparse
import os
import sys

from isokit import freeext as FX
from isokit.alpha import AlphaContext
from isokit.errors import InputError, ValidationError
from isokit.fincat import aut_identity_functor
from isokit.fingroup import limit_of_diagram
from isokit.io import Loader, detect_kind, dumps, theory_to_json
from isokit.isotropy import automorphism_of, inner_witnesses, isotropy_group
from isokit.phl import check_model, group_theory
from isokit.presheaf import nat_auts
from isokit.sexpr import format_term
from isokit.tj import SigmaJ, build_tj, expected_counts, presheaf_to_model


class Failure(Exception):
    """A well-formed input that fails a check; exit status 1."""

    def __init__(self, payload):
        super().__init__(payload.get("error", "check failed"))
        self.payload = payload


# ------------------------------------------------------------ helpers


def _presheaf_json_element(F, g):
    return {o: F.at(o).names[a] for o, a in zip(F.base.objects, g)}


def _nat_json(mu):
    return {o: mu(o).as_names() for o in mu.source.base.objects}


def _witness_json(e):
    return e.to_json()


def _term_context(args, loader):
    """Resolve the term argument plus --presheaf/--x into (AlphaContext, term text)."""
    text, presheaf, x = args.term, None, None
    if os.path.isfile(text):
        if text.endswith(".json"):
            doc = loader.load(text, "term")
            text = doc["term"]
            presheaf = doc.get("presheaf")
            x = doc.get("x")
        else:
            with open(text, encoding="utf-8") as fh:
                text = fh.read().strip()
    if args.presheaf:
        presheaf = loader.load(args.presheaf, "presheaf")
    if presheaf is None:
        raise InputError("a presheaf is needed to read the term (use --presheaf)")
    x = args.x or x or SigmaJ.sort("X", presheaf.base.objects[0])
    tj = build_tj(group_theory(), presheaf.base)
    M = presheaf_to_model(tj, presheaf)
    ctx = AlphaContext(tj, M, x)
    return ctx, ctx.parse(text)


# ------------------------------------------------------------ commands


def cmd_validate(args, loader):
    doc = loader.read_json(args.file)
    kind = args.kind or detect_kind(doc)
    if kind == "structure":
        if not args.theory and "theory" not in doc:
            raise InputError("validating a structure needs --theory")
        if args.theory:
            loader.structure(args.file, loader.load(args.theory, "theory").signature)
        else:
            loader.load(args.file, kind)
        return {"kind": kind, "valid": True}
    obj = loader.load(args.file, kind)
    out = {"kind": kind, "valid": True}
    if kind == "category":
        out.update(objects=len(obj.objects), morphisms=len(obj.morphisms))
    elif kind == "group":
        out.update(order=obj.order)
    elif kind == "presheaf":
        out.update(objects=len(obj.base.objects))
    elif kind == "theory":
        out.update(sorts=len(obj.signature.sorts), funs=len(obj.signature.funs),
                   axioms=len(obj.axioms))
    return out


def cmd_aut_id(args, loader):
    J = loader.load(args.category, "category")
    A = aut_identity_functor(J)
    return {"order": A.order,
            "elements": [dict(zip(J.objects, p.components)) for p in A.items]}


def cmd_limit(args, loader):
    F = loader.load(args.presheaf, "presheaf")
    L = limit_of_diagram(F.base, F)
    return {"order": L.order, "elements": [_presheaf_json_element(F, t) for t in L.items]}


def cmd_nat_auts(args, loader):
    F = loader.load(args.presheaf, "presheaf")
    N = nat_auts(F)
    iso = isotropy_group(F)
    elements = []
    for mu in N.items:
        w = inner_witnesses(F, mu, iso)
        elements.append({"components": _nat_json(mu), "inner": bool(w)})
    return {"order": N.order, "inner_count": sum(e["inner"] for e in elements),
            "elements": elements}


def cmd_isotropy(args, loader):
    F = loader.load(args.presheaf, "presheaf")
    iso = isotropy_group(F)
    gens = iso.generators()
    return {
        "order": iso.order,
        "lim_order": iso.lim.order,
        "aut_id_order": iso.aut_id.order,
        "generators": [_witness_json(e) for e in gens],
        "witnesses": [{"element": _witness_json(e), "automorphism": _nat_json(automorphism_of(e))}
                      for e in gens],
    }


def cmd_is_inner(args, loader):
    F = loader.load(args.presheaf, "presheaf")
    mu = loader.load(args.nat_trans, "nat-trans")
    if mu.source is not F:
        # the nat-trans file may reference its own copy of the presheaf
        from isokit.presheaf import NatTrans
        mu = NatTrans(F, F, {o: type(mu(o))(F.at(o), F.at(o), mu(o).images) for o in F.base.objects})
    w = inner_witnesses(F, mu)
    return {"inner": bool(w), "witnesses": [_witness_json(e) for e in w]}


def cmd_isotropy_search(args, loader):
    G = loader.load(args.group, "group")
    found = FX.isotropy_search(G, max_len=args.max_len, jobs=args.jobs)
    conj = {FX.conjugator_word(G, g): G.names[g] for g in range(G.order)}
    return {
        "metadata": {"max_len": args.max_len, "exponents": list(FX.EXPONENTS),
                     "inverse_slack": FX.INVERSE_SEARCH_SLACK},
        "count": len(found),
        "elements": [{"word": FX.format_word(G, e.word), "syllables": FX.word_to_json(G, e.word),
                      "inverse": FX.format_word(G, e.inverse), "conjugator": conj.get(e.word)}
                     for e in found],
    }


def cmd_build_tj(args, loader):
    th = loader.load(args.theory, "theory")
    J = loader.load(args.category, "category")
    tj = build_tj(th, J)
    counts = tj.counts()
    expected = expected_counts(th, J)
    out = {"counts": counts, "expected": expected, "matches": counts == expected}
    if args.full:
        out["theory"] = theory_to_json(tj.theory)
    return out


def cmd_check_model(args, loader):
    th = loader.load(args.theory, "theory")
    if args.category:
        th = build_tj(th, loader.load(args.category, "category")).theory
    M = loader.structure(args.structure, th.signature)
    report = check_model(M, th).to_json()
    if not report["ok"]:
        raise Failure({"error": "structure is not a model", **report})
    return report


def cmd_normalize(args, loader):
    ctx, t = _term_context(args, loader)
    nf, steps = ctx.normalize_by_steps(t, args.strategy)
    return {"input": format_term(t), "normal_form": format_term(nf), "steps": steps,
            "sort": nf.sort, "alpha_restricted": ctx.is_alpha_restricted(nf)}


def _theta_like(args, loader, star):
    ctx, t = _term_context(args, loader)
    if args.normalize:
        t = ctx.normalize(t)
    out = ctx.theta_star(t) if star else ctx.theta(t)
    return {"input": format_term(t), "output": format_term(out), "sort": out.sort}


def cmd_theta(args, loader):
    return _theta_like(args, loader, star=False)


def cmd_theta_star(args, loader):
    return _theta_like(args, loader, star=True)


# ------------------------------------------------------------ parser


def build_parser():
    p = argparse.ArgumentParser(prog="isokit", description="Covariant isotropy of group presheaves.")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="validate any workspace file")
    s.add_argument("file")
    s.add_argument("--kind", choices=["category", "group", "presheaf", "nat-trans", "theory",
                                      "structure"])
    s.add_argument("--theory", help="theory for a structure file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("aut-id", help="natural automorphisms of the identity functor")
    s.add_argument("category")
    s.set_defaults(func=cmd_aut_id)

    s = sub.add_parser("limit", help="limit of a group presheaf")
    s.add_argument("presheaf")
    s.set_defaults(func=cmd_limit)

    s = sub.add_parser("nat-auts", help="natural automorphisms of a presheaf")
    s.add_argument("presheaf")
    s.set_defaults(func=cmd_nat_auts)

    s = sub.add_parser("isotropy", help="the isotropy group lim F × Aut(Id_J)")
    s.add_argument("presheaf")
    s.set_defaults(func=cmd_isotropy)

    s = sub.add_parser("is-inner", help="decide whether a natural automorphism is inner")
    s.add_argument("presheaf")
    s.add_argument("nat_trans")
    s.set_defaults(func=cmd_is_inner)

    s = sub.add_parser("isotropy-search", help="substitutionally invertible words in G * <x>")
    s.add_argument("group")
    s.add_argument("--max-len", type=int, default=3)
    s.set_defaults(func=cmd_isotropy_search)

    s = sub.add_parser("build-tj", help="generate the theory T^J")
    s.add_argument("theory")
    s.add_argument("category")
    s.add_argument("--full", action="store_true", help="include every generated axiom")
    s.set_defaults(func=cmd_build_tj)

    s = sub.add_parser("check-model", help="check a finite structure against a theory")
    s.add_argument("structure")
    s.add_argument("theory")
    s.add_argument("--category", help="check against T^J for this category instead")
    s.set_defaults(func=cmd_check_model)

    for name, func, help_ in (("normalize", cmd_normalize, "alpha-restricted normal form"),
                              ("theta", cmd_theta, "replace alpha_f(x) by x:f"),
                              ("theta-star", cmd_theta_star, "theta, then erase the labels")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("term", help="s-expression, or a .json/.sexp file holding one")
        s.add_argument("--presheaf", help="presheaf supplying the model M")
        s.add_argument("--x", help="sort of the indeterminate, e.g. X@i")
        if name == "normalize":
            s.add_argument("--strategy", choices=["innermost", "outermost"], default="innermost")
        else:
            s.add_argument("--normalize", action="store_true", help="normalize the input first")
        s.set_defaults(func=func)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    loader = Loader()
    try:
        out = args.func(args, loader)
    except Failure as exc:
        print(dumps(exc.payload), file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(dumps({"error": str(exc), "violations": exc.violations}), file=sys.stderr)
        return 1
    except InputError as exc:
        print(dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    print(dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
