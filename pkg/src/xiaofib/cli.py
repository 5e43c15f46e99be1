"""Command-line front end.

Subcommands: ``verify`` runs the full claim ledger, ``numerology``,
``monodromy``, ``lattice`` and ``quartic`` expose the individual
engines.  All values are printed exactly (integers and rationals).
Exit codes: 0 success, 1 claim failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lattice, ledger, monodromy, numerology, quartic


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xiaofib",
        description="Exact verification of dihedral-cover fibration numerology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the full claim ledger")
    verify.add_argument("--format", choices=("json", "markdown"), default="markdown")
    verify.add_argument("--only", metavar="CASE", help="restrict to one case id (e.g. g4p3)")
    verify.add_argument("--seed", type=int, default=1)
    verify.add_argument("--max-group-order", type=int, default=monodromy.DEFAULT_MAX_GROUP_ORDER)

    num = sub.add_parser("numerology", help="closed-form arithmetic for one (g, p)")
    num.add_argument("--genus", type=int, required=True, metavar="G")
    num.add_argument("--degree", type=int, required=True, metavar="P")

    mon = sub.add_parser("monodromy", help="genus computations from permutation monodromy")
    source = mon.add_mutually_exclusive_group(required=True)
    source.add_argument("--dihedral", nargs=2, type=int, metavar=("G", "P"))
    source.add_argument("--file", metavar="PATH", help="cover description file")
    mon.add_argument("--max-group-order", type=int, default=monodromy.DEFAULT_MAX_GROUP_ORDER)

    lat = sub.add_parser("lattice", help="print an intersection lattice and its named classes")
    lat.add_argument("--case", choices=("g3-product", "g3-sym2", "g2-product"), required=True)

    qua = sub.add_parser("quartic", help="exact certificates for a plane quartic")
    qua.add_argument("--poly", required=True, metavar="STR")
    qua.add_argument("--check", choices=("smooth", "flexes"), required=True)
    qua.add_argument("--seed", type=int, default=1)

    return parser


def _cmd_verify(args) -> int:
    code, reports = ledger.verify_paper(
        only=args.only,
        seed=args.seed,
        max_group_order=args.max_group_order,
    )
    if args.only and not reports:
        print(f"no claims for case {args.only!r}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(ledger.render_json(reports))
    else:
        print(ledger.render_markdown(reports))
    return code


def _cmd_numerology(args) -> int:
    try:
        params = numerology.CoverParams(args.genus, args.degree)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    g_c, g_d = numerology.cover_genera(params)
    gamma = numerology.gamma_self_intersection(params)
    fiber = numerology.psi_fiber_class(params)
    dim_h, dim_m = numerology.moduli_dims(params)
    cw = numerology.chevalley_weil(params)
    q_rel = cw.prym_dim  # relative irregularity of the associated fibration
    report = numerology.xiao_report(g_c, q_rel)
    print(f"g_C = {g_c}")
    print(f"g_D = {g_d}")
    print(f"gamma^2 = {gamma}")
    if fiber.finite:
        print("fiber class: finite")
    elif fiber.dimension is None:
        print("fiber class: positive-dimensional")
    else:
        print(f"fiber class: positive-dimensional of dimension {fiber.dimension}")
    print(f"moduli dimensions: source {dim_h}, target {dim_m}")
    print(f"chevalley-weil dims: {list(cw.dims)} (prym {cw.prym_dim}, sym2-invariants {cw.sym2_invariant_dim})")
    print(f"xiao bound: {report.bound}")
    print(f"q_rel = {q_rel}: xiao {str(report.is_xiao).lower()}, "
          f"meets ceiling {str(report.meets_ceiling).lower()}, "
          f"bgn bound {report.bgn_bound_at_generic_clifford}")
    return 0


def _monodromy_summary(cover: monodromy.BranchedCover, max_group_order: int) -> int:
    genus = monodromy.rh_genus(cover)
    group = monodromy.generated_group(cover, max_group_order)
    closure = monodromy.galois_closure_genus(cover, max_group_order)
    print(f"degree {cover.degree} cover of a genus-{cover.base_genus} base, "
          f"{len(cover.branch_monodromy)} branch points")
    print(f"genus = {genus}")
    print(f"monodromy group: {group.classification} of order {group.order}")
    print(f"galois closure genus = {closure}")
    profiles = monodromy.ramification_profile(cover)
    distinct = sorted(set(profiles))
    rendered = ", ".join("{" + ", ".join(map(str, p)) + "}" for p in distinct)
    print(f"ramification profiles: {rendered}")
    if group.classification == monodromy.DIHEDRAL:
        rotations = monodromy.cyclic_rotation_subgroup(group)
        print(f"quotient by the rotation subgroup: genus = "
              f"{monodromy.quotient_genus(cover, rotations, max_group_order)}")
    return 0


def _cmd_monodromy(args) -> int:
    try:
        if args.dihedral:
            g, p = args.dihedral
            cover = monodromy.build_dihedral_cover(g, p)
        else:
            cover = monodromy.load_cover(args.file)
        return _monodromy_summary(cover, args.max_group_order)
    except (monodromy.MonodromyDataError, monodromy.EnumerationLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _cmd_lattice(args) -> int:
    if args.case == "g3-product":
        lat = lattice.product_with_diagonal_lattice(3)
        chain = lattice.branch_class(3)
        xp = lat.class_from_intersections((2, 2, 10))
        classes = {
            "K": lat.canonical_class(),
            "X_P": xp,
            "B": chain.branch,
            "L": chain.half,
        }
    elif args.case == "g2-product":
        lat = lattice.product_with_diagonal_lattice(2)
        classes = {
            "K": lat.canonical_class(),
            "C_P": lat.class_from_intersections((2, 2, 8)),
        }
    else:
        lat = lattice.symmetric_square_lattice(3)
        chain = lattice.branch_class(3)
        classes = {
            "K": lat.canonical_class(),
            "tau_D_P": lattice.apply_matrix(chain.involution, lat.basis_class("D_P")),
            "tau_delta": lattice.apply_matrix(chain.involution, lat.basis_class("delta")),
            "tau_Delta": lattice.apply_matrix(chain.involution, lattice.DivisorClass((0, 2))),
        }
    print(json.dumps(lat.to_json_dict(classes), indent=2))
    return 0


def _cmd_quartic(args) -> int:
    try:
        form = quartic.parse_ternary_form(args.poly)
    except quartic.FormParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    if args.check == "smooth":
        try:
            smooth = quartic.is_smooth(form)
        except quartic.DegenerateFormError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"form: {form}")
        print(f"smooth: {str(smooth).lower()}")
        return 0
    try:
        certificate = quartic.flexes_all_simple(form, args.seed)
    except (quartic.DegenerateFormError, quartic.RetryBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"form: {form}")
    print(f"flex polynomial degree: {certificate.flex_degree}")
    print(f"all flexes simple: {str(certificate.all_simple).lower()}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "numerology": _cmd_numerology,
        "monodromy": _cmd_monodromy,
        "lattice": _cmd_lattice,
        "quartic": _cmd_quartic,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
