"""Command-line front end.

Thin adapters over the library: every subcommand reads JSON, calls one or
two library functions, and prints JSON.  Exit codes: 0 success, 2 schema
violation, 3 domain violation, 4 numeric degeneracy.
"""

import argparse
import cmath
import json
import sys

import numpy as np

from . import builder, coordinates, fuchsian, moves, shearbend, surface, symmetry
from .coordinates import EdgeParams
from .projective import DegenerateInputError, SingularMapError

EXIT_SCHEMA = 2
EXIT_DOMAIN = 3
EXIT_NUMERIC = 4


class SchemaError(ValueError):
    pass


class DomainError(ValueError):
    pass


def _c(z):
    z = complex(z)
    return [z.real, z.imag]


def _matrix(m):
    return [[_c(m.m[0, 0]), _c(m.m[0, 1])], [_c(m.m[1, 0]), _c(m.m[1, 1])]]


def _load_surface(path):
    if path is None:
        raise SchemaError("--surface is required for this command")
    try:
        with open(path) as fh:
            doc = json.load(fh)
        surf = surface.from_json(doc)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as ex:
        raise SchemaError("cannot read surface file %s: %s" % (path, ex))
    problems = surface.validate(surf)
    if problems:
        raise SchemaError("invalid surface: %s" % "; ".join(problems))
    return surf


def _load_params(path, surf, tol):
    if path is None:
        raise SchemaError("--params is required for this command")
    try:
        params = coordinates.load_params(path)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as ex:
        raise SchemaError("cannot read parameter file %s: %s" % (path, ex))
    try:
        ok = coordinates.in_domain(params, surf, tol=tol)
    except KeyError as ex:
        raise SchemaError("parameter keys do not match the surface: %s" % ex)
    if not ok:
        raise DomainError("parameters violate the admissibility inequalities")
    return params


def _emit(doc, out):
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _word_list(pres):
    """Generators, pairwise products, and relation prefixes."""
    gens = pres.generators()
    words = [((g,), [(g, 1)]) for g in gens]
    for i, g in enumerate(gens):
        for h in gens[i + 1:]:
            words.append(((g, h), [(g, 1), (h, 1)]))
    rel = pres.one_relator()
    for n in range(2, len(rel)):
        label = tuple("%s^%d" % gh for gh in rel[:n])
        words.append((label, list(rel[:n])))
    return words


def cmd_validate(args):
    surf = _load_surface(args.surface)
    doc = {"surface": "ok", "genus": surf.genus, "boundary": surf.boundary}
    if args.params:
        _load_params(args.params, surf, args.tol)
        doc["params"] = "ok"
    _emit(doc, args.out)
    return 0


def cmd_generators(args):
    surf = _load_surface(args.surface)
    params = _load_params(args.params, surf, args.tol)
    rep = builder.build(surf, params)
    residuals = builder.verify_relations(rep)
    doc = {
        "generators": {name: _matrix(rep.image(name)) for name in sorted(rep.images)},
        "relation_residuals": {k: float(v) for k, v in residuals.items()},
    }
    _emit(doc, args.out)
    return 0


def cmd_traces(args):
    surf = _load_surface(args.surface)
    params = _load_params(args.params, surf, args.tol)
    rep = builder.build(surf, params)
    out = {}
    for label, word in _word_list(rep.presentation):
        m = rep.evaluate(word)
        out["*".join(str(x) for x in label)] = _c(np.trace(m.m))
    _emit({"traces": out}, args.out)
    return 0


def cmd_recover(args):
    surf = _load_surface(args.surface)
    params = _load_params(args.params, surf, args.tol)
    rep = builder.build(surf, params)
    recovered = builder.recover_coordinates(rep, tol=args.tol)
    err = 0.0
    for eid in params.eigen:
        cand = (abs(recovered.eigen[eid] - params.eigen[eid]),
                abs(1 / recovered.eigen[eid] - params.eigen[eid]))
        err = max(err, min(cand))
    doc = {"recovered": coordinates.params_to_json(recovered),
           "max_eigen_error_up_to_inversion": err}
    _emit(doc, args.out)
    return 0


def cmd_act(args):
    surf = _load_surface(args.surface)
    params = _load_params(args.params, surf, args.tol)
    if args.flip is None and not args.epsilon:
        raise SchemaError("act needs --flip and/or --epsilon")
    if args.flip is not None:
        params = symmetry.flip_eigenvalue(params, surf, args.flip)
    if args.epsilon:
        try:
            ids = [int(x) for x in args.epsilon.split(",") if x]
        except ValueError as ex:
            raise SchemaError("--epsilon must be a comma-separated edge list: %s" % ex)
        eps = {eid: (-1 if eid in ids else 1) for eid in surf.graph.edges}
        if not symmetry.check_epsilon(eps, surf):
            raise DomainError("sign vector %s is not admissible" % sorted(ids))
        params = symmetry.act_epsilon(params, eps, surf)
    _emit(coordinates.params_to_json(params), args.out)
    return 0


def cmd_move(args):
    surf = _load_surface(args.surface)
    params = _load_params(args.params, surf, args.tol)
    if args.kind is None or args.target is None:
        raise SchemaError("move needs --kind and --target")
    branch = None
    if args.branch:
        try:
            re, im = (float(x) for x in args.branch.split(","))
            branch = complex(re, im)
        except ValueError as ex:
            raise SchemaError("--branch must be re,im: %s" % ex)
    target = args.target
    if args.kind != "auto":
        try:
            target = int(target)
        except ValueError:
            raise SchemaError("--target must be an edge or vertex id")
        pool = surf.graph.vertices if args.kind == "vertex" else surf.graph.edges
        if target not in pool:
            raise DomainError("target %r does not exist in the surface" % target)
    else:
        raise SchemaError("automorphism moves need programmatic data; use the library")
    new_surf, new_params = moves.apply_move(surf, params, moves.Move(args.kind, target, branch))
    _emit({"surface": surface.to_json(new_surf),
           "params": coordinates.params_to_json(new_params)}, args.out)
    return 0


def cmd_fn(args):
    surf = _load_surface(args.surface)
    params = _load_params(args.params, surf, args.tol)
    fn = fuchsian.to_fenchel_nielsen(params, surf, require_domain=False)
    back = fuchsian.from_fenchel_nielsen(fn, surf)
    err = max(
        max(abs(back.eigen[k] - params.eigen[k]) for k in params.eigen),
        max((abs(back.twist[k] - params.twist[k]) for k in params.twist), default=0.0),
    )

    def emit_val(v):
        v = complex(v)
        return v.real if abs(v.imag) < 1e-12 else [v.real, v.imag]

    _emit({"lengths": {str(k): emit_val(v) for k, v in sorted(fn.lengths.items())},
           "twists": {str(k): emit_val(v) for k, v in sorted(fn.fn_twists.items())},
           "meta": {"normalization": fn.meta["normalization"],
                    "on_locus": fn.meta["on_locus"]},
           "roundtrip_error": err}, args.out)
    return 0


def cmd_shearbend(args):
    surf = _load_surface(args.surface)
    params = _load_params(args.params, surf, args.tol)
    g = surf.graph
    loops = [e for e in g.interior_edges() if g.edges[e].tail == g.edges[e].head]
    if surf.genus != 1 or surf.boundary != 1 or len(loops) != 1:
        raise DomainError("shearbend conversion is defined for the one-holed torus")
    loop = loops[0]
    bdry = [e for e in g.edges if g.is_boundary(e)][0]
    e1, e2, t1 = params.eigen[loop], params.eigen[bdry], params.twist[loop]
    a, b, c, z1, z2 = shearbend.one_holed_to_shear(e1, e2, t1)
    ma_inv, mb = shearbend.shear_rep_one_holed(a, b, c)
    rep = builder.build(surf, params)
    report = {}
    for name, m in (("a1", ma_inv.inverse()), ("b1", mb)):
        got = np.trace(m.m) ** 2 / np.linalg.det(m.m)
        ref = np.trace(rep.image(name).m) ** 2
        report[name] = {"shear_tr2": _c(got), "builder_tr2": _c(ref),
                        "difference": abs(complex(got) - complex(ref))}
    _emit({"a": _c(a), "b": _c(b), "c": _c(c), "z1": _c(z1), "z2": _c(z2),
           "trace_check": report}, args.out)
    return 0


def sample_params(surf, rng, fuchsian_mode):
    g = surf.graph
    eigen, twist = {}, {}
    for eid in sorted(g.edges):
        if fuchsian_mode:
            eigen[eid] = complex(-np.exp(rng.uniform(0.1, 2)))
        else:
            eigen[eid] = None
    if not fuchsian_mode:
        for _ in range(1000):
            for eid in sorted(g.edges):
                r = np.exp(rng.uniform(np.log(1.2), np.log(5.0)))
                th = rng.uniform(0, 2 * np.pi)
                eigen[eid] = r * cmath.exp(1j * th)
            probe = EdgeParams(dict(eigen), {e: 1.0 + 0j for e in g.interior_edges()})
            if coordinates.in_domain(probe, surf):
                break
        else:
            raise DegenerateInputError("rejection sampling failed to hit the domain")
    for eid in sorted(g.interior_edges()):
        if fuchsian_mode:
            twist[eid] = complex(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        else:
            r = np.exp(rng.uniform(np.log(0.1), np.log(10.0)))
            th = rng.uniform(0, 2 * np.pi)
            twist[eid] = r * cmath.exp(1j * th)
    return EdgeParams(eigen, twist)


def cmd_sample(args):
    surf = _load_surface(args.surface)
    rng = np.random.default_rng(args.seed)
    points = []
    worst = 0.0
    for _ in range(args.n):
        params = sample_params(surf, rng, args.fuchsian)
        rep = builder.build(surf, params)
        res = max(builder.verify_relations(rep).values())
        worst = max(worst, res)
        points.append({"params": coordinates.params_to_json(params),
                       "relation_residual": float(res)})
    _emit({"seed": args.seed, "n": args.n, "worst_residual": float(worst),
           "points": points}, args.out)
    return 0


EXAMPLES = {
    "four-holed": surface.four_holed_sphere,
    "one-holed": surface.one_holed_torus,
    "genus2": surface.genus_two,
}


def cmd_example(args):
    if args.which not in EXAMPLES:
        raise SchemaError("unknown example %r; choose from %s"
                          % (args.which, sorted(EXAMPLES)))
    surf = EXAMPLES[args.which]()
    g = surf.graph
    eigen = {eid: complex(-2.0 - 0.5 * i) for i, eid in enumerate(sorted(g.edges))}
    twist = {eid: complex(1.0 + 0.25 * i) for i, eid in enumerate(sorted(g.interior_edges()))}
    params = EdgeParams(eigen, twist)
    rep = builder.build(surf, params)
    doc = {
        "surface": surface.to_json(surf),
        "params": coordinates.params_to_json(params),
        "generators": {name: _matrix(rep.image(name)) for name in sorted(rep.images)},
        "relation_residuals": {k: float(v) for k, v in builder.verify_relations(rep).items()},
    }
    _emit(doc, args.out)
    return 0


def make_parser():
    p = argparse.ArgumentParser(
        prog="pantsrep",
        description="Matrix representations of surface groups from "
                    "eigenvalue-twist coordinates on pants decompositions.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        sp = sub.add_parser(name)
        sp.set_defaults(fn=fn)
        sp.add_argument("--surface")
        sp.add_argument("--params")
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--out")
        for flag, kw in flags.items():
            sp.add_argument(flag, **kw)
        return sp

    add("validate", cmd_validate)
    add("generators", cmd_generators)
    add("traces", cmd_traces)
    add("recover", cmd_recover)
    add("act", cmd_act, **{"--flip": {"type": int}, "--epsilon": {}})
    add("move", cmd_move, **{"--kind": {"choices": ["reverse", "twist-l", "twist-r", "vertex", "auto", "elem"]},
                             "--target": {}, "--branch": {}})
    add("fn", cmd_fn)
    add("shearbend", cmd_shearbend)
    add("sample", cmd_sample, **{"--n": {"type": int, "default": 10},
                                 "--seed": {"type": int, "default": 0},
                                 "--fuchsian": {"action": "store_true"}})
    sp = sub.add_parser("example")
    sp.set_defaults(fn=cmd_example)
    sp.add_argument("which", choices=sorted(EXAMPLES))
    sp.add_argument("--out")
    return p


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SchemaError as ex:
        _emit({"error": "schema", "detail": str(ex)}, None)
        return EXIT_SCHEMA
    except (DomainError, KeyError) as ex:
        _emit({"error": "domain", "detail": str(ex)}, None)
        return EXIT_DOMAIN
    except (DegenerateInputError, SingularMapError, ZeroDivisionError, ArithmeticError) as ex:
        doc = {"error": "numeric", "detail": str(ex)}
        factor = getattr(ex, "factor", None)
        if factor:
            doc["factor"] = factor
        _emit(doc, None)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
