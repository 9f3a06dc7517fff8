"""Exhaustive and randomized verification suites.

Each suite returns a list of criterion results; ``run_suite`` wraps them
in a JSON-ready report.  Independent cases fan out to worker processes
when ``jobs > 1``; results are reduced by conjunction, so the report is
the same for any number of workers.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from . import ds as dsm
from .exterior import SpoiledElement, abar_component, core_component
from .groth_h import (
    GrMinusElement,
    GrXiElement,
    basis_product,
    check_image_pm,
    embed,
    from_pm,
    kkk_exception,
)
from .groth_q import ABasisElement, mul_a, psi_g, psi_g_inverse, sch_typical, symmetrize
from .supercharacter import (
    cone_weights,
    check_block_support,
    check_mod4,
    mod4_violations,
    sch_L_q2,
    sch_L_q2_recursive,
    sch_verma,
    un_minus_coeff,
    un_minus_coeff_bruteforce,
)
from .weights import Weight, abar, core

SUITES = ("oracle", "rings", "ds", "supercharacter")
MAX_FAILURES = 5


@dataclass
class Criterion:
    id: str
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    failed: int = 0
    notes: dict = field(default_factory=dict)

    def record(self, ok: bool, case: str) -> None:
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(case)

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.cases > 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "pass": self.passed,
            "cases": self.cases,
            "failed": self.failed,
            "failures": self.failures,
            "notes": self.notes,
        }


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=chunk))


def weight_box(n: int, max_entry: int) -> list[Weight]:
    r = range(-max_entry, max_entry + 1)
    return [Weight(e) for e in product(r, repeat=n)]


def dominant_box(n: int, max_entry: int, half: bool = True) -> list[Weight]:
    """Dominant weights of q(n) with |entries| <= max_entry, integral and (optionally) half-integral."""
    out = []
    ints = [Fraction(k) for k in range(1, max_entry + 1)]
    for pos_mask in range(1 << len(ints)):
        pos = [v for i, v in enumerate(ints) if pos_mask >> i & 1]
        for neg_mask in range(1 << len(ints)):
            neg = [-v for i, v in enumerate(ints) if neg_mask >> i & 1]
            z = n - len(pos) - len(neg)
            if z < 0:
                continue
            out.append(Weight(sorted(pos, reverse=True) + [0] * z + sorted(neg, reverse=True)))
    if half:
        halves = [Fraction(2 * k + 1, 2) for k in range(-max_entry, max_entry) if abs(Fraction(2 * k + 1, 2)) <= max_entry]
        for mask in range(1 << len(halves)):
            vals = [v for i, v in enumerate(halves) if mask >> i & 1]
            if len(vals) == n:
                out.append(Weight(sorted(vals, reverse=True)))
    return sorted(out, key=lambda w: w.entries)


# oracle suite


def _oracle_row(args: tuple[Weight, tuple[Weight, ...]]) -> list[tuple]:
    from .oracle.verify import verify_tensor_thm

    lam, mus = args
    rows = []
    for mu in mus:
        rep = verify_tensor_thm(lam, mu)
        d = rep["details"]
        nu = lam + mu
        M, K = basis_product(lam, mu)
        total_ok = M + K == d["total_dim"] >> nu.n_lambda
        sc_ok = bool(nu.parity) or d["smult"] == d["sc"]
        signed = None if nu.parity else M - K
        literal_ok = bool(nu.parity) or ((signed == 0) == (not kkk_exception(lam, mu)))
        rows.append(
            (
                f"{lam.literal()} x {mu.literal()}",
                sc_ok and total_ok,
                rep["pass"],
                not d["printed_exponent_agrees"],
                literal_ok,
                rep["checks"]["pi_invariance_vs_kkk"],
                bool(nu.parity) and d["i1_mod2_oracle"] != d["i1_mod2_sc"],
            )
        )
    return rows


def _head_socle(lam: Weight) -> tuple[str, bool]:
    from .oracle.verify import verify_T_head_socle

    return lam.literal(), verify_T_head_socle(lam)


def suite_oracle(max_n: int = 3, max_entry: int = 2, jobs: int = 1, **_) -> list[Criterion]:
    c1 = Criterion("1", "oracle-model equivalence")
    c2 = Criterion("2", "tensor theorem with the dimension-derived exponent")
    c3 = Criterion("3", "Pi-invariance condition iff signed part of the Gr_xi product is 0")
    c3m = Criterion("3m", "module-level Pi-invariance iff not the exceptional case (socle test)")
    c9 = Criterion("9", "T maps the injective hull onto its socle")
    disagree: list[str] = []
    i1_gap = 0
    work = []
    for n in range(1, max_n + 1):
        box = tuple(weight_box(n, max_entry))
        work += [(lam, box) for lam in box]
    for rows in _pmap(_oracle_row, work, jobs):
        for case, ok1, ok2, dis, ok3, ok3m, gap in rows:
            c1.record(ok1, case)
            c2.record(ok2, case)
            c3.record(ok3, case)
            c3m.record(ok3m, case)
            if dis:
                disagree.append(case)
            i1_gap += gap
    c2.notes = {
        "printed_exponent_disagreements": len(disagree),
        "first_disagreement": disagree[0] if disagree else None,
    }
    if not disagree:
        c2.record(False, "printed exponent formula was expected to disagree somewhere")
    c1.notes = {"scope": "sc compared on I0 targets; totals on all pairs", "i1_mod2_gap_pairs": i1_gap}
    hulls = [lam for n in range(1, max_n + 1) for lam in weight_box(n, max_entry) if 1 <= lam.zero_count <= 3]
    for case, ok in _pmap(_head_socle, hulls, jobs):
        c9.record(ok, case)
    return [c1, c2, c3, c3m, c9]


# rings suite


def _model_grading_ok(lam: Weight) -> bool:
    z = psi_g(ABasisElement.basis(lam))
    A = core(lam.entries)
    return core_component(z, A) == z and abar_component(z, abar(A)) == z


def _random_xi(rng: random.Random, max_n: int, max_entry: int) -> GrXiElement:
    n = rng.randint(1, max_n)
    terms = {}
    for _ in range(rng.randint(0, 5)):
        w = Weight([rng.randint(-max_entry, max_entry) for _ in range(n)])
        terms[w] = (rng.randint(-6, 6), rng.randint(-6, 6))
    return GrXiElement(terms)


def _in_image_bruteforce(p: dict, q: dict) -> bool:
    """Search (m, k) in a window for every weight independently."""
    for w in set(p) | set(q):
        a, b = p.get(w, 0), q.get(w, 0)
        found = False
        for m in range(-16, 17):
            for k in range(-16, 17):
                if w.parity:
                    # Gr_xi on I1: xi acts trivially, (m, k) ~ (m + k, 0)
                    if k == 0 and m == a and m % 2 == b:
                        found = True
                elif m + k == a and m - k == b:
                    found = True
        if not found:
            return False
    return True


def suite_rings(max_n: int = 6, max_entry: int = 3, seed: int = 0, samples: int = 1000, **_) -> list[Criterion]:
    c4 = Criterion("4", "psi_g is a graded ring isomorphism onto the model")
    c8 = Criterion("8", "Gr embeds in Gr_+ x Gr_- with the parity image")
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        dom = dominant_box(n, max_entry)
        for lam in dom:
            a = ABasisElement.basis(lam)
            c4.record(psi_g_inverse(psi_g(a)) == a, f"round trip {lam.literal()}")
            c4.record(_model_grading_ok(lam), f"grading {lam.literal()}")
        for lam in dom:
            x = ABasisElement.basis(lam)
            for mu in dom:
                y = ABasisElement.basis(mu)
                ok = psi_g(mul_a(x, y)) == psi_g(x) * psi_g(y)
                c4.record(ok, f"hom {lam.literal()} * {mu.literal()}")
        # surjectivity: random model elements built from admissible monomials
        for _ in range(20):
            z = SpoiledElement.zero("value", n)
            for lam in rng.sample(dom, min(4, len(dom))):
                z = z + psi_g(ABasisElement.basis(lam, rng.randint(-3, 3)))
            c4.record(psi_g(psi_g_inverse(z)) == z, f"onto n={n}")
    for i in range(samples):
        x = _random_xi(rng, 3, 2)
        p, q = embed(x)
        c8.record(check_image_pm(p, q) and from_pm(p, q) == x, f"sample {i}")
        # perturbed pair: the image test must agree with a brute-force search
        w = next(iter(p), None) or next(iter(q.terms), None)
        if w is None:
            continue
        p2 = dict(p)
        p2[w] = p2.get(w, 0) + rng.choice([-1, 1, 2])
        q2 = q.terms
        c8.record(check_image_pm(p2, q2) == _in_image_bruteforce(p2, q2), f"perturbed {i}")
    return [c4, c8]


# ds suite


def suite_ds(max_n: int = 5, max_entry: int = 2, oracle_n: int = 3, jobs: int = 1, **_) -> list[Criterion]:
    c7 = Criterion("7", "ds maps: homomorphism, composition, kernel/image, oracle agreement")
    for n in range(1, max_n + 1):
        dom = dominant_box(n, max_entry)
        basis = [ABasisElement.basis(w) for w in dom]
        for r in range(n + 1):
            imgs = {}
            for lam, x in zip(dom, basis):
                y = dsm.ds_a(r, x)
                c7.record((not y) == (lam.zero_count < r), f"kernel r={r} {lam.literal()}")
                c7.record(psi_g(y) == dsm.ds_model(r, psi_g(x)), f"psi square r={r} {lam.literal()}")
                if y:
                    imgs.setdefault(y, []).append(lam)
                for mu, z in zip(dom, basis):
                    ok = dsm.ds_a(r, x * z) == y * dsm.ds_a(r, z)
                    c7.record(ok, f"hom r={r} {lam.literal()} * {mu.literal()}")
            c7.record(all(len(v) == 1 for v in imgs.values()), f"injective off kernel n={n} r={r}")
            # image: every integral dominant weight of q(n - r) in the box, nothing else
            target = {ABasisElement.basis(w) for w in dominant_box(n - r, max_entry, half=(r == 0)) if n - r > 0}
            if n - r > 0:
                c7.record(set(imgs) == target, f"image n={n} r={r}")
            for i in range(r + 1):
                for x in basis:
                    c7.record(dsm.check_composition(i, r - i, x), f"composition {i}+{r - i}")
    cases = []
    for n in range(1, oracle_n + 1):
        for lam in weight_box(n, max_entry):
            cases.append(lam)
    for case, ok in _pmap(_ds_oracle_case, cases, jobs):
        c7.record(ok, case)
    for n in range(1, oracle_n + 1):
        for mu in dominant_box(n, max_entry):
            for r in range(n + 1):
                lhs = dsm.ds_h(r, symmetrize(mu))
                rhs = dsm.ds_a(r, ABasisElement.basis(mu))
                rhs_h = GrMinusElement()
                for nu, c in rhs.terms.items():
                    rhs_h = rhs_h + symmetrize(nu).scale(c)
                c7.record(lhs == rhs_h, f"orbit sums r={r} {mu.literal()}")
    c7.notes = {"dsmod4": _dsmod4_check()}
    if not c7.notes["dsmod4"]["pass"]:
        c7.record(False, "dsmod4 congruence")
    return [c7]


def _ds_oracle_case(lam: Weight) -> tuple[str, bool]:
    n = lam.n
    ok = True
    for r in range(n + 1):
        pred = dsm.ds_h(r, GrMinusElement.basis(lam))
        for nu in weight_box(n - r, int(max(abs(a) for a in lam.entries) or 1)) if n - r else [Weight([])]:
            got = dsm.smult_restriction_oracle(lam, nu)
            want = pred[nu] % 2 if nu.parity else pred[nu]
            if got != want:
                ok = False
    return f"restriction {lam.literal()}", ok


def _dsmod4_check() -> dict:
    sources = [sch_L_q2(Weight([s, -s])) for s in range(0, 9)]
    sources += [sch_L_q2(Weight([Fraction(2 * s + 1, 2), -Fraction(2 * s + 1, 2)])) for s in range(0, 9)]
    lams = [Weight([s, -s]) for s in range(0, 9)] + [Weight([Fraction(2 * s + 1, 2), -Fraction(2 * s + 1, 2)]) for s in range(0, 9)]
    for n in range(1, 5):
        for w in dominant_box(n, 2):
            if w.is_typical():
                sources.append(sch_typical(w))
                lams.append(w)
    checked = 0
    for lam, x in zip(lams, sources):
        if lam.parity:
            continue
        for r in range(x.n + 1):
            for nu in dsm.ds_a(r, x).terms:
                checked += 1
                if (lam.zero_count - nu.zero_count - r) % 4:
                    return {"pass": False, "witness": [lam.literal(), r, nu.literal()], "checked": checked}
    return {"pass": True, "checked": checked}


# supercharacter suite


def _q2_expected(lam: Weight) -> ABasisElement:
    a, b = lam.entries
    if a + b != 0 or a == 0:
        return ABasisElement.basis(lam) if a or b else ABasisElement.one(2)
    if a.denominator == 1:
        return ABasisElement(2, {Weight([i, -i]): 1 for i in range(1, int(a) + 1)})
    return ABasisElement(2, {Weight([i + Fraction(1, 2), -i - Fraction(1, 2)]): 1 for i in range(int(a - Fraction(1, 2)) + 1)})


def _verma_row(lam: Weight, depth: int) -> tuple[str, bool, bool, bool, list[str]]:
    x = sch_verma(lam, depth)
    coeff_ok = all(c in (-1, 0, 1) for c in x.terms.values())
    viol = [w.literal() for w in mod4_violations(x, lam)]
    return lam.literal(), coeff_ok, check_block_support(x, lam), check_mod4(x, lam), viol


def _verma_case(args: tuple) -> tuple:
    return _verma_row(*args)


def suite_supercharacter(max_n: int = 4, max_entry: int = 2, depth: int = 6, max_s: int = 8, jobs: int = 1, **_) -> list[Criterion]:
    c5 = Criterion("5", "q(2) table and its telescoping recursion")
    half = Fraction(1, 2)
    q2 = [Weight([s, -s]) for s in range(max_s + 1)] + [Weight([s + half, -s - half]) for s in range(max_s + 1)]
    q2 += [w for w in dominant_box(2, max_s) if w.is_typical()]
    for lam in q2:
        got = sch_L_q2(lam)
        c5.record(got == _q2_expected(lam), f"table {lam.literal()}")
        c5.record(sch_L_q2_recursive(lam) == got, f"recursion {lam.literal()}")
        c5.record(check_block_support(got, lam) and check_mod4(got, lam), f"constraints {lam.literal()}")

    c6 = Criterion("6", "U(n^-) coefficients and constraints on Verma supercharacters")
    for n in range(1, max_n + 1):
        for nu in cone_weights(n, depth):
            fast = un_minus_coeff(nu)
            ok = fast in (-1, 0, 1) and fast == un_minus_coeff_bruteforce(nu)
            c6.record(ok, f"coefficient {nu.literal()}")
    lams = [lam for n in range(1, max_n + 1) for lam in weight_box(n, max_entry)]
    mod4_bad: list[str] = []
    for case, coeff_ok, block_ok, mod4_ok, viol in _pmap(_verma_case, [(lam, depth) for lam in lams], jobs):
        c6.record(coeff_ok and block_ok, f"verma {case}")
        c6.record(mod4_ok, f"verma mod4 {case}: {viol[:3]}")
        if not mod4_ok:
            mod4_bad.append(case)
    c6.notes = {
        "verma_weights": len(lams),
        "mod4_violating_weights": len(mod4_bad),
        "first_mod4_violation": mod4_bad[0] if mod4_bad else None,
    }
    return [c5, c6]


_SUITE_FUNCS = {
    "oracle": suite_oracle,
    "rings": suite_rings,
    "ds": suite_ds,
    "supercharacter": suite_supercharacter,
}


def run_suite(name: str, **params) -> dict:
    if name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}")
    params = {k: v for k, v in params.items() if v is not None}
    crits = _SUITE_FUNCS[name](**params)
    return {
        "suite": name,
        "params": {k: str(v) for k, v in sorted(params.items()) if k != "jobs"},
        "criteria": [c.to_json() for c in crits],
        "pass": all(c.passed for c in crits),
    }


def iter_suites(names: Iterable[str] | None = None) -> Iterable[str]:
    return list(names) if names else list(SUITES)
