"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.  Every
tolerance is pinned here; the helper oracles live in support.py and are
independent of the library kernels they check.
"""

import math
import time

import numpy as np

import hyplab.cli as cli
from hyplab import (
    BCMatrix,
    BCVector,
    Bicomplex,
    DPlus,
    DSeminorm,
    E1,
    E2,
    ONE,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    abs_summability_check,
    bc_mul,
    euclid_norm,
    geometric_terms,
    hyp_abs,
    knorm,
    op_dnorm,
    open_mapping_delta,
    open_mapping_verify,
    seminorm_eval,
    series_sum,
    ubp_verify,
    vec_dnorm,
    zabreiko_decompose,
)
from hyplab.jsonio import dumps, matrix_to_json, vector_to_json
from support import mul4, random_bc, random_mat, random_vec, surjective_mat


def report(num: int, name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {num} {name}: {'PASS' if ok else 'FAIL'}")


def rel_ok_c(a: complex, b: complex, tol: float = 1e-12) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def test_criterion_1_algebra_suite():
    ok = True

    # unit table, exact in four-real arithmetic
    units = {"1": ONE, "i": UNIT_I, "j": UNIT_J, "k": UNIT_K}
    expect = {
        ("i", "i"): (-1.0, 0.0, 0.0, 0.0),
        ("j", "j"): (-1.0, 0.0, 0.0, 0.0),
        ("k", "k"): (1.0, 0.0, 0.0, 0.0),
        ("i", "j"): (0.0, 0.0, 0.0, 1.0),
        ("i", "k"): (0.0, 0.0, -1.0, 0.0),
        ("j", "k"): (0.0, -1.0, 0.0, 0.0),
    }
    for (a, b), want in expect.items():
        ok &= bc_mul(units[a], units[b]).to_reals() == want

    # idempotent identities, exact
    ok &= bc_mul(E1, E1).to_reals() == E1.to_reals()
    ok &= bc_mul(E2, E2).to_reals() == E2.to_reals()
    ok &= bc_mul(E1, E2).to_reals() == (0.0, 0.0, 0.0, 0.0)
    ok &= (E1 + E2).to_reals() == (1.0, 0.0, 0.0, 0.0)

    # ring axioms and product homomorphism over 10^4 seeded samples
    rng = np.random.default_rng(0xA1)
    for _ in range(10_000):
        x, y, z = random_bc(rng), random_bc(rng), random_bc(rng)
        s1 = (x + y) + z
        s2 = x + (y + z)
        ok &= rel_ok_c(s1.z1, s2.z1) and rel_ok_c(s1.z2, s2.z2)
        p1 = bc_mul(bc_mul(x, y), z)
        p2 = bc_mul(x, bc_mul(y, z))
        ok &= rel_ok_c(p1.z1, p2.z1) and rel_ok_c(p1.z2, p2.z2)
        d1 = bc_mul(x, y + z)
        d2 = bc_mul(x, y) + bc_mul(x, z)
        ok &= rel_ok_c(d1.z1, d2.z1) and rel_ok_c(d1.z2, d2.z2)
        c1 = bc_mul(x, y)
        c2 = bc_mul(y, x)
        ok &= c1.z1 == c2.z1 and c1.z2 == c2.z2
        # homomorphism: the idempotent product agrees with the four-real path
        four = Bicomplex.from_reals(*mul4(x.to_reals(), y.to_reals()))
        ok &= rel_ok_c(c1.z1, four.z1) and rel_ok_c(c1.z2, four.z2)
        # and the components are the componentwise products
        ok &= c1.z1 == x.z1 * y.z1 and c1.z2 == x.z2 * y.z2

    report(1, "algebra suite", ok)
    assert ok


def test_criterion_2_norm_suite():
    ok = True
    rng = np.random.default_rng(0xA2)
    sqrt2 = math.sqrt(2.0)

    for _ in range(10_000):
        z, w = random_bc(rng), random_bc(rng)
        # knorm multiplicativity
        lhs = knorm(bc_mul(z, w))
        rhs = knorm(z) * knorm(w)
        ok &= abs(lhs.a1 - rhs.a1) <= 1e-12 * max(1.0, rhs.a1)
        ok &= abs(lhs.a2 - rhs.a2) <= 1e-12 * max(1.0, rhs.a2)
        # |alpha|_k = alpha on the cone
        alpha = DPlus(abs(z.z1), abs(z.z2))
        ok &= hyp_abs(alpha) == alpha
        # componentwise knorm <= sqrt(2) * euclidean modulus
        bound = sqrt2 * euclid_norm(z) + 1e-12
        n = knorm(z)
        ok &= n.a1 <= bound and n.a2 <= bound

    # D-norm axioms (a)-(c) on 10^4 vector samples
    for _ in range(10_000):
        n = int(rng.integers(1, 7))
        x = random_vec(rng, n)
        y = random_vec(rng, n)
        mu = random_bc(rng)
        nx = vec_dnorm(x)
        ok &= (nx.a1 == 0 and nx.a2 == 0) == (not x.v1.any() and not x.v2.any())
        hom_l = vec_dnorm(x.scale(mu))
        hom_r = knorm(mu) * nx
        ok &= abs(hom_l.a1 - hom_r.a1) <= 1e-12 * max(1.0, hom_r.a1)
        ok &= abs(hom_l.a2 - hom_r.a2) <= 1e-12 * max(1.0, hom_r.a2)
        tri_l = vec_dnorm(x + y)
        tri_r = nx + vec_dnorm(y)
        ok &= tri_l.a1 <= tri_r.a1 + 1e-12 * max(1.0, tri_r.a1)
        ok &= tri_l.a2 <= tri_r.a2 + 1e-12 * max(1.0, tri_r.a2)

    report(2, "norm suite", ok)
    assert ok


def test_criterion_3_operator_norm_oracle():
    ok = True
    rng = np.random.default_rng(0xA3)
    start = time.perf_counter()
    for _ in range(50):
        T = random_mat(rng, 4, 4)
        M = op_dnorm(T, tol=1e-10).M
        V = rng.standard_normal((4, 100_000)) + 1j * rng.standard_normal((4, 100_000))
        V /= np.linalg.norm(V, axis=0)
        r1 = np.linalg.norm(T.m1 @ V, axis=0)
        r2 = np.linalg.norm(T.m2 @ V, axis=0)
        # sampling lower bound: the kernel value dominates the Monte-Carlo sup
        ok &= M.a1 >= r1.max() - 1e-3 * max(1.0, M.a1)
        ok &= M.a2 >= r2.max() - 1e-3 * max(1.0, M.a2)
        # soundness never violated beyond 1e-9
        ok &= bool((r1 <= M.a1 + 1e-9).all())
        ok &= bool((r2 <= M.a2 + 1e-9).all())
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10.0

    report(3, f"operator-norm oracle equivalence ({elapsed:.1f}s)", ok)
    assert ok


def test_criterion_4_open_mapping_suite():
    ok = True
    rng = np.random.default_rng(0xA4)
    for i in range(20):
        T = surjective_mat(rng, 3, 6)
        rep = open_mapping_verify(T, trials=1000, seed=1000 + i)
        ok &= rep.solve_ok and rep.bound_ok
        ok &= rep.worst_residual.a1 <= 1e-9 and rep.worst_residual.a2 <= 1e-9
        # independent normal-equations oracle for delta = 1/sigma_min
        delta = open_mapping_delta(T)
        for comp, d in ((T.m1, delta.a1), (T.m2, delta.a2)):
            lam_min = float(np.linalg.eigvalsh(comp @ comp.conj().T)[0])
            ok &= abs(d - 1.0 / math.sqrt(lam_min)) < 1e-8

    report(4, "open-mapping suite", ok)
    assert ok


def test_criterion_5_zabreiko_replay():
    ok = True
    rng = np.random.default_rng(0xA5)
    for _ in range(20):
        n = int(rng.integers(2, 6))
        T = random_mat(rng, n, n)
        p = DSeminorm(T)
        r = float(rng.uniform(0.5, 2.0))
        x = random_vec(rng, n)
        nx = vec_dnorm(x)
        x = x.scale(float(rng.uniform(0.2, 0.95)) * r / max(nx.a1, nx.a2))
        a = op_dnorm(T).M
        m = DPlus(2.0 * a.a1 * r * float(rng.uniform(1.0, 1.5)),
                  2.0 * a.a2 * r * float(rng.uniform(1.0, 1.5)))
        eps = DPlus(float(rng.uniform(0.1, 2.0)), float(rng.uniform(0.1, 2.0)))
        trace = zabreiko_decompose(p, x, m, r, eps, 48)

        # replay every recorded inequality independently of the flags
        nx = vec_dnorm(x)
        u_prev = x
        total = BCVector.zeros(n)
        for idx, (xk, uk) in enumerate(zip(trace.x_terms, trace.remainders)):
            diff = u_prev - xk
            ok &= bool(np.array_equal(diff.v1, uk.v1) and np.array_equal(diff.v2, uk.v2))
            pk = seminorm_eval(p, xk)
            tb = trace.epsilons[idx] * m  # eps_{k-1} m, eps_0 = ||x||/r
            ok &= pk.a1 <= tb.a1 + 1e-9 and pk.a2 <= tb.a2 + 1e-9
            un = vec_dnorm(uk)
            rb = trace.epsilons[idx + 1] * r
            ok &= un.a1 <= rb.a1 + 1e-9 and un.a2 <= rb.a2 + 1e-9
            total = total + xk
            tail = vec_dnorm(x - total)
            cap1 = math.ldexp(eps.a1 * r / m.a1, -(idx + 1))
            cap2 = math.ldexp(eps.a2 * r / m.a2, -(idx + 1))
            ok &= tail.a1 <= cap1 + 1e-9 and tail.a2 <= cap2 + 1e-9
            u_prev = uk
        px = seminorm_eval(p, x)
        ok &= px.a1 <= m.a1 * nx.a1 / r + eps.a1 + 1e-9
        ok &= px.a2 <= m.a2 * nx.a2 / r + eps.a2 + 1e-9
        ok &= trace.passed

    report(5, "zabreiko replay", ok)
    assert ok


def test_criterion_6_series_suite():
    ok = True
    ratio = Bicomplex(0.5, 0.25)
    rep = series_sum(geometric_terms(ratio, BCVector([1.0], [1.0])), DPlus(1e-12, 1e-12), 200)
    ok &= rep.converged and rep.n_terms <= 200
    ok &= abs(rep.limit.v1[0] - 2.0) < 1e-12
    ok &= abs(rep.limit.v2[0] - 4.0 / 3.0) < 1e-12

    # absolute-summability Cauchy chain, componentwise within 1e-12
    rng = np.random.default_rng(0xA6)
    v = random_vec(rng, 4)
    chain = abs_summability_check(geometric_terms(ratio, v), 300, DPlus(1e-12, 1e-12))
    ok &= bool(chain.abs_converged and chain.cauchy_chain_ok)
    ok &= chain.chain_margin.a1 <= 1e-12 and chain.chain_margin.a2 <= 1e-12

    report(6, "series suite", ok)
    assert ok


def test_criterion_7_ubp_suite():
    ok = True
    rng = np.random.default_rng(0xA7)
    for i in range(10):
        family = [random_mat(rng, 4, 4) for _ in range(10)]
        rep = ubp_verify(family, samples=100, seed=7000 + i)
        ok &= rep.passed
        ok &= rep.worst_margin.a1 <= 1e-9 and rep.worst_margin.a2 <= 1e-9
        # shrinking delta by (1 - 1e-6) must produce a violation
        d = rep.bound_delta
        shrunk = DPlus((1 - 1e-6) * d.a1, (1 - 1e-6) * d.a2)
        bad = ubp_verify(family, samples=100, seed=7000 + i, delta=shrunk)
        ok &= not bad.passed

    report(7, "ubp suite", ok)
    assert ok


def test_criterion_8_determinism(tmp_path):
    ok = True
    rng = np.random.default_rng(0xA8)

    def run_twice(argv):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        c1 = cli.run(argv + ["--output", str(out1)])
        c2 = cli.run(argv + ["--output", str(out2)])
        same = out1.read_bytes() == out2.read_bytes()
        return c1 == c2 and same and out1.read_bytes() != b""

    mat = tmp_path / "T.json"
    mat.write_text(dumps(matrix_to_json(random_mat(rng, 3, 3))))
    ok &= run_twice(["opnorm", "--matrix", str(mat), "--tol", "1e-10"])
    ok &= run_twice(["lemma31", "--matrix", str(mat), "--trials", "64", "--seed", "5"])

    wide = tmp_path / "W.json"
    wide.write_text(dumps(matrix_to_json(surjective_mat(rng, 2, 4))))
    ok &= run_twice(["omt-verify", "--matrix", str(wide), "--trials", "64", "--seed", "5"])

    fam = tmp_path / "fam.json"
    fam.write_text(dumps([matrix_to_json(random_mat(rng, 3, 3)) for _ in range(4)]))
    ok &= run_twice(["ubp", "--family", str(fam), "--samples", "32", "--seed", "5"])

    ident = tmp_path / "I.json"
    ident.write_text(dumps(matrix_to_json(BCMatrix.identity(2))))
    xv = tmp_path / "x.json"
    xv.write_text(dumps(vector_to_json(BCVector([0.5, 0.25], [0.5, 0.25]))))
    ok &= run_twice([
        "zabreiko", "--matrix", str(ident), "--x", str(xv),
        "--m", "2,2", "--r", "1", "--eps", "1,1", "--seed", "7", "--maxN", "50",
    ])

    report(8, "determinism", ok)
    assert ok
