"""The reproduction suite behind ``liecoho reproduce-paper``.

Each corpus entry is processed independently (optionally in worker
processes) into a plain JSON-ready record; the report lists the records in
corpus order followed by the aggregated checks, so the output does not
depend on scheduling.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction as F

from . import oracle
from .algebra import (
    characteristic_sequence_at,
    first_betti,
    is_filiform,
    jacobi_check,
    lower_central_series_dims,
)
from .cohomology import cohomology_dims, delta_matrix, independent_classes, is_coboundary, is_cocycle
from .derivations import (
    derivation_basis,
    derivation_identity_holds,
    inner_basis,
    is_complete,
    is_inner,
    rank_certificate,
)
from .families import (
    FamilySpec,
    abelian,
    build_family,
    deformation_cocycle,
    heisenberg,
    r2,
    rh_lambda_count,
    semidirect,
)
from .io import vector_to_strings
from .linalg import format_rational, unit_vector

DISCLOSURES = (
    "Q_n is built with [Y1,Yj]=Y(j+1) for j<=n-2; the table with [Y1,Y(n-1)]=Yn is isomorphic via Y1 -> Y1+Y2 "
    "but its basis diagonalises only a 1-dimensional torus.",
    "B_n^k: sign (-1)^(i+1) on Yn for [Yi,Y(n-i+1)], i=2..n/2; a_ij brackets target Y(i+j+k-2) up to Y(n-1).",
    "C_n: sign (-1)^(i-1) on Yn for [Yi,Y(n-i+1)], i=2..m+1.",
    "Ranks are diagonal-torus dimensions in the given basis (lower bounds in general, exact for this corpus).",
    "B_n^k lambda values are taken on the Jacobi locus 2*lambda_1 + lambda_2 = 0.",
    "Filiform certificates use a searched characteristic vector. At Y1 itself Q_n, B_n^k and C_n give (n-2, 1, 1) "
    "(column c(Y1)); no basis makes Y1 characteristic while keeping the torus of the rank check diagonal.",
)

GENERIC_LAMBDA = (F(1), F(2, 3), F(-5, 7), F(3, 11), F(7, 5))


def family_corpus() -> list[FamilySpec]:
    specs = [FamilySpec("L", n=n) for n in range(4, 11)]
    specs += [FamilySpec("Q", n=n) for n in (4, 6, 8, 10)]
    specs += [
        FamilySpec("A", n=8, k=2, lam=GENERIC_LAMBDA[:2]),
        FamilySpec("A", n=10, k=4, lam=GENERIC_LAMBDA[:2]),
        FamilySpec("A", n=12, k=4, lam=GENERIC_LAMBDA[:3]),
        FamilySpec("B", n=8, k=2, lam=(1, -2)),
        FamilySpec("B", n=10, k=4, lam=(1, -2)),
    ]
    specs += [FamilySpec("C", n=n, lam=GENERIC_LAMBDA[: (n - 2) // 2 - 1]) for n in (6, 8, 10, 12)]
    return specs


def rh_corpus(stretch: bool = True) -> list[FamilySpec]:
    cases = [(4, 3), (4, 4), (4, 5)]
    if stretch:
        cases += [(6, 3), (6, 5), (6, 7)]
    return [FamilySpec("Rh", k=k, h=h, lam=GENERIC_LAMBDA[: rh_lambda_count(h)]) for k, h in cases]


def oracle_corpus(count: int = 20, seed: int = 20240917) -> list:
    rng = random.Random(seed)
    small = [("Heisenberg", heisenberg()), ("r2", r2()), ("abelian 2", abelian(2))]
    small += [(str(s), build_family(s)) for s in (FamilySpec("L", n=4), FamilySpec("Q", n=4))]
    small += [(f"random3 #{i + 1}", oracle.random_algebra_3d(rng)) for i in range(count)]
    return small


def _delta_squares_vanish(g, degrees=(0, 1, 2)) -> bool:
    return all((delta_matrix(g, p + 1) @ delta_matrix(g, p)).is_zero() for p in degrees)


def _sparse_matrix(m) -> list:
    return [[i + 1, j + 1, format_rational(v)] for i, j, v in m.items()]


def _expected_rank(spec: FamilySpec) -> int:
    return 2 if spec.tag in ("L", "Q") else 1


def family_record(spec: FamilySpec) -> dict:
    g = build_family(spec)
    n = g.dim
    filiform, witness = is_filiform(g)
    try:
        cy1 = list(characteristic_sequence_at(g, unit_vector(n, 0)).parts)
    except ValueError:
        cy1 = None
    rank, torus = rank_certificate(g)
    der = derivation_basis(g)
    inner = inner_basis(g)
    z1 = cohomology_dims(g, 1)
    s = semidirect(g, torus)
    verdict = is_complete(s)
    s_der = derivation_basis(s)
    s_z1 = cohomology_dims(s, 1)
    rec = {
        "spec": str(spec),
        "dim": n,
        "jacobi": "pass" if not jacobi_check(g) else "fail",
        "b1": first_betti(g),
        "lower_central_series": list(lower_central_series_dims(g)),
        "char_seq_at_Y1": cy1,
        "filiform": filiform,
        "filiform_witness": vector_to_strings(witness) if witness else None,
        "rank": rank,
        "weights": [vector_to_strings(w) for w in torus.weight_vectors],
        "der_dim": der.dim,
        "inner_dim": inner.dim,
        "z1": z1.dim_Z,
        "b1_coboundaries": z1.dim_B,
        "delta_squared_zero": _delta_squares_vanish(g),
        "semidirect": {
            "dim": s.dim,
            "h0": verdict.h0,
            "h1": verdict.h1,
            "complete": verdict.complete,
            "der_dim": s_der.dim,
            "z1": s_z1.dim_Z,
            "derivation_witness": _sparse_matrix(verdict.derivation_witness) if verdict.derivation_witness else None,
        },
    }
    checks = {
        "coboundary_identity": rec["delta_squared_zero"],
        "z1_equals_der": der.dim == z1.dim_Z and inner.dim == z1.dim_B and s_der.dim == s_z1.dim_Z,
        "rank_certificate": rank == _expected_rank(spec) and rank <= 2,
        "filiform_certificate": filiform and rec["jacobi"] == "pass",
    }
    if spec.tag == "C":
        w = verdict.derivation_witness
        checks["completeness"] = (
            not verdict.complete
            and w is not None
            and derivation_identity_holds(s, w)
            and not is_inner(s, w)
            and w[n - 2, 1] != 0
        )
    else:
        checks["completeness"] = verdict.complete
    rec["checks"] = checks
    return rec


def rh_record(spec: FamilySpec) -> dict:
    g = build_family(spec)
    verdict = is_complete(g)
    h2 = cohomology_dims(g, 2)
    phis = [deformation_cocycle(spec.k, spec.h, w, spec.lam) for w in range(1, rh_lambda_count(spec.h) + 1)]
    phi_info = [{"which": i + 1, "cocycle": is_cocycle(p), "coboundary": is_coboundary(p) is not None}
                for i, p in enumerate(phis)]
    bound = spec.h // 2
    rec = {
        "spec": str(spec),
        "dim": g.dim,
        "jacobi": "pass" if not jacobi_check(g) else "fail",
        "h0": verdict.h0,
        "h1": verdict.h1,
        "complete": verdict.complete,
        "h2": {"dim_C": h2.dim_C, "dim_Z": h2.dim_Z, "dim_B": h2.dim_B, "dim_H": h2.dim_H},
        "deformations": phi_info,
        "independent_deformations": independent_classes(phis),
        "bound": bound,
    }
    rec["checks"] = {
        "completeness": verdict.complete,
        "h2_growth": h2.dim_H >= bound
        and all(p["cocycle"] and not p["coboundary"] for p in phi_info)
        and rec["independent_deformations"] >= bound,
    }
    return rec


def oracle_record(item) -> dict:
    name, g = item
    rows = []
    ok = True
    for p in range(3):
        d = cohomology_dims(g, p)
        o = oracle.cohomology_dims(g, p)
        rows.append({"p": p, "dims": [d.dim_C, d.dim_Z, d.dim_B, d.dim_H], "oracle": list(o)})
        ok = ok and (d.dim_C, d.dim_Z, d.dim_B, d.dim_H) == o
    h0 = cohomology_dims(g, 0).dim_H
    h1 = cohomology_dims(g, 1).dim_H
    ok = ok and h0 == oracle.center_dim(g) and h1 == oracle.derivation_dim(g) - oracle.inner_dim(g)
    return {
        "name": name,
        "dim": g.dim,
        "brackets": {f"{i + 1},{j + 1}": vector_to_strings(c.get(k, 0) for k in range(g.dim))
                     for (i, j), c in g.constants.items()},
        "cohomology": rows,
        "checks": {"oracle_equivalence": ok},
    }


FIXTURES = (
    ("dim Der(L_4)", 7),
    ("dim H^1(L_4)", 4),
    ("dim Der(Heisenberg)", 6),
    ("r_2 complete", True),
)


def fixture_values() -> dict:
    l4 = build_family(FamilySpec("L", n=4))
    h = heisenberg()
    return {
        "dim Der(L_4)": (derivation_basis(l4).dim, oracle.derivation_dim(l4)),
        "dim H^1(L_4)": (cohomology_dims(l4, 1).dim_H, oracle.cohomology_dims(l4, 1)[3]),
        "dim Der(Heisenberg)": (derivation_basis(h).dim, oracle.derivation_dim(h)),
        "r_2 complete": (is_complete(r2()).complete,
                         oracle.center_dim(r2()) == 0 and oracle.derivation_dim(r2()) == oracle.inner_dim(r2())),
    }


def _run(fn, items, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def build_report(jobs: int = 1, stretch: bool = True) -> dict:
    fam = _run(family_record, family_corpus(), jobs)
    rh = _run(rh_record, rh_corpus(stretch), jobs)
    orc = _run(oracle_record, oracle_corpus(), jobs)
    fx = fixture_values()
    fixtures = [{"name": name, "expected": expected, "computed": fx[name][0], "oracle": fx[name][1],
                 "pass": fx[name][0] == expected and fx[name][1] in (expected, True)}
                for name, expected in FIXTURES]

    def agg(records, key):
        return all(r["checks"][key] for r in records if key in r["checks"])

    checks = [
        {"criterion": 1, "name": "coboundary identity delta^2 = 0 (p = 0, 1, 2)", "pass": agg(fam, "coboundary_identity")},
        {"criterion": 2, "name": "Z^1 = Der and B^1 = inner", "pass": agg(fam, "z1_equals_der")},
        {"criterion": 3, "name": "rank certificates (2 for L, Q; 1 for A, B, C)", "pass": agg(fam, "rank_certificate")},
        {"criterion": 4, "name": "completeness of n + t (A, B, L, Q complete; C not)", "pass": agg(fam, "completeness")},
        {"criterion": 5, "name": "dim H^2(r_h) >= floor(h/2), deformations non-trivial",
         "pass": agg(rh, "h2_growth") and agg(rh, "completeness")},
        {"criterion": 6, "name": "filiform certificates (witness of characteristic sequence (n-1, 1))",
         "pass": agg(fam, "filiform_certificate")},
        {"criterion": 7, "name": "brute-force oracle agreement (p = 0, 1, 2)", "pass": agg(orc, "oracle_equivalence")},
        {"criterion": 8, "name": "pinned fixtures", "pass": all(f["pass"] for f in fixtures)},
    ]
    return {
        "disclosures": list(DISCLOSURES),
        "families": fam,
        "r_h": rh,
        "oracle": orc,
        "fixtures": fixtures,
        "checks": checks,
        "all_pass": all(c["pass"] for c in checks),
    }


def report_table(report: dict) -> str:
    lines = []
    lines.append(f"{'algebra':32} {'b1':>3} {'rank':>4} {'c(Y1)':>12} {'h0':>3} {'h1':>3} complete")
    for r in report["families"]:
        s = r["semidirect"]
        cy1 = ",".join(map(str, r["char_seq_at_Y1"])) if r["char_seq_at_Y1"] else "-"
        lines.append(f"{r['spec']:32} {r['b1']:>3} {r['rank']:>4} {cy1:>12} {s['h0']:>3} {s['h1']:>3} {s['complete']}")
    lines.append("")
    lines.append(f"{'r_h':32} {'dim':>4} {'H^2':>4} {'bound':>5} {'indep':>5} complete")
    for r in report["r_h"]:
        lines.append(f"{r['spec']:32} {r['dim']:>4} {r['h2']['dim_H']:>4} {r['bound']:>5} "
                     f"{r['independent_deformations']:>5} {r['complete']}")
    lines.append("")
    for c in report["checks"]:
        lines.append(f"[{'PASS' if c['pass'] else 'FAIL'}] {c['criterion']}. {c['name']}")
    return "\n".join(lines) + "\n"
