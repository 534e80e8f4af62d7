"""Invariant suites that cross-check every computed object against an independent route.

Each suite returns a :class:`VerifyReport`. A failure records the inputs, the
expected and actual values (serialized), and a command line that reproduces
the single failing case.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable

import numpy as np

from .algebra import (APoly, FieldSpec, TPoly, UPoly, ZPoly, binom_mod_p, chi_eval,
                      exact_div, lcm, rational_reduce)
from .approximation import (LinearMapSpec, alpha_decompose, carlitz_approx, carlitz_constant,
                            digit_principle_holds, divide_by_t_minus_theta, gen_series, p_approx,
                            pellarin_degree_sum, wagner_coeff, wagner_product, wagner_truncated_eval)
from .carlitz import e_poly, e_shift, enumerate_below, enumerate_monic, factorials, m_one
from .powersums import boeckle_degree, phi_degree, power_sum, q_length, sheats_test, twisted_power_sum
from .specialpolys import l_value, trivial_zero_order, z_brute, z_recursive

SUITES = ("algebra", "carlitz", "powersums", "specialpolys", "approximation")


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list[dict] = dc_field(default_factory=list)

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "status": self.status, "failures": self.failures}


def _jsonable(x: Any) -> Any:
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


class _Recorder:
    def __init__(self, report: VerifyReport, field: FieldSpec):
        self.report = report
        self.field = field

    def check(self, name: str, inputs: dict, expected: Any, actual: Any) -> None:
        self.report.cases += 1
        if expected == actual:
            return
        f = self.field
        flags = " ".join(f"--{k.replace('_', '-')} {v}" for k, v in inputs.items() if isinstance(v, int))
        self.report.failures.append({
            "check": name,
            "inputs": dict(inputs),
            "expected": _jsonable(expected),
            "actual": _jsonable(actual),
            "reproducer": (f"verify --suite {self.report.suite} --p {f.p} --e {f.e} "
                           f"--modulus {','.join(map(str, f.modulus))} {flags}").strip(),
        })


def _max_d(field: FieldSpec, wanted: int, cap: int) -> int:
    """Largest d <= wanted with q^d <= cap."""
    d = 0
    while d < wanted and field.q ** (d + 1) <= cap:
        d += 1
    return d


def _random_apoly(field: FieldSpec, rng: random.Random, deg: int) -> APoly:
    return APoly.from_coeffs(field, [field.from_index(rng.randrange(field.q)) for _ in range(deg + 1)])


def _random_poly(cls, field: FieldSpec, rng: random.Random, size: int = 3):
    n = len(cls.VARS)
    if size == 0:
        return cls.zero(field)
    shape = (size,) * n + (field.e,)
    total = math.prod(shape)
    flat = [rng.randrange(field.p) for _ in range(total)]
    return cls(field, np.array(flat, dtype=np.int64).reshape(shape))


# -- suites


def suite_algebra(field: FieldSpec, max_d: int, max_k: int, seed: int) -> VerifyReport:
    rep = _Recorder(VerifyReport("algebra"), field)
    rng = random.Random(seed)
    samples = 6
    for cls in (APoly, TPoly, UPoly, ZPoly):
        for i in range(samples):
            a, b, c = (_random_poly(cls, field, rng, rng.randrange(4)) for _ in range(3))
            inputs = {"ring": cls.__name__, "sample": i}
            rep.check("associativity", inputs, (a * b) * c, a * (b * c))
            rep.check("distributivity", inputs, a * (b + c), a * b + a * c)
            rep.check("additive_inverse", inputs, cls.zero(field), a + (-a))
    elems = list(field.elements())
    for i in range(samples):
        x, y, z = (rng.choice(elems) for _ in range(3))
        inputs = {"ring": "FqElem", "sample": i}
        rep.check("associativity", inputs, (x * y) * z, x * (y * z))
        rep.check("distributivity", inputs, x * (y + z), x * y + x * z)
        rep.check("additive_inverse", inputs, field.element(0), x + (-x))
    for i in range(samples):
        f, g = _random_poly(TPoly, field, rng), _random_poly(TPoly, field, rng)
        rep.check("frobenius", {"sample": i}, f**field.p + g**field.p, (f + g) ** field.p)
    for i in range(samples):
        a, b = _random_apoly(field, rng, 3), _random_apoly(field, rng, 2)
        rep.check("chi_mul", {"sample": i}, chi_eval(a) * chi_eval(b), chi_eval(a * b))
        rep.check("chi_add", {"sample": i}, chi_eval(a) + chi_eval(b), chi_eval(a + b))
        for m in range(3):
            value = APoly.theta(field) ** (field.q**m)
            rep.check("specialization", {"sample": i, "m": m}, a ** (field.q**m), chi_eval(a).specialize_t(value))
    for n in range(65):
        for r in range(n + 1):
            rep.check("binom_mod_p", {"n": n, "r": r}, math.comb(n, r) % field.p, binom_mod_p(n, r, field.p))
    for i in range(samples):
        f = _random_poly(TPoly, field, rng)
        den = _random_apoly(field, rng, 2)
        if den.is_zero():
            continue
        rep.check("exact_div", {"sample": i}, f, exact_div(f * den, den))
    return rep.report


def suite_carlitz(field: FieldSpec, max_d: int, max_k: int, seed: int) -> VerifyReport:
    rep = _Recorder(VerifyReport("carlitz"), field)
    rng = random.Random(seed)
    q = field.q
    top = _max_d(field, max(max_d, 3), 27) if q <= 3 else _max_d(field, max(max_d, 2), 25)
    for d in range(top + 1):
        fb = factorials(field, d)
        monics = enumerate_monic(field, d)
        prod, common = APoly.one(field), APoly.one(field)
        for a in monics:
            prod = prod * a
            common = lcm(common, a)
        rep.check("D_is_product", {"d": d}, prod, fb.D)
        rep.check("L_is_lcm", {"d": d}, common, fb.L)
        ed, es = e_poly(field, d), e_shift(field, d)
        rep.check("e_poly_linear", {"d": d}, True, ed.is_fq_linear())
        rep.check("e_poly_z_coeff", {"d": d}, m_one(field, d).embed(TPoly), ed.coeff(1))
        for a in monics:
            rep.check("e_shift_root", {"d": d}, TPoly.zero(field), es(a.embed(TPoly)))
        for a in enumerate_below(field, d):
            rep.check("e_poly_root", {"d": d}, TPoly.zero(field), ed(a.embed(TPoly)))
        sign = -1 if q**d % 2 else 1
        rep.check("e_shift_at_zero", {"d": d}, fb.D.embed(TPoly) * sign, es.constant_term())
        for i in range(4):
            a, b = _random_apoly(field, rng, d + 2), _random_apoly(field, rng, d + 1)
            c = field.from_index(rng.randrange(q))
            lhs = ed((a + b.scale(c)).embed(TPoly))
            rhs = ed(a.embed(TPoly)) + ed(b.embed(TPoly)).scale(c)
            rep.check("e_poly_additive", {"d": d, "sample": i}, rhs, lhs)
    return rep.report


def _specialization_m(field: FieldSpec, k: int) -> int:
    m = 0
    while field.q**m <= field.p ** (field.e - 1) * k:
        m += 1
    return m


def suite_powersums(field: FieldSpec, max_d: int, max_k: int, seed: int) -> VerifyReport:
    rep = _Recorder(VerifyReport("powersums"), field)
    q = field.q
    dtop = min(max_d, 2)
    kmax = max(max_k, 40)
    for d in range(dtop + 1):
        for k in range(1, kmax + 1):
            rep.check("sheats", {"d": d, "k": k}, not power_sum(field, d, k).is_zero(), sheats_test(field, d, k))
    for k in range(1, min(kmax, 30) + 1):
        bound = boeckle_degree(field, k)
        nonzero = [d for d in range(bound + 3) if not power_sum(field, d, k).is_zero()]
        rep.check("boeckle", {"k": k}, max(nonzero), bound)
    theta = APoly.theta(field)
    for d in range(dtop + 1):
        for beta in range(7):
            for k in range(7):
                m = _specialization_m(field, k)
                lhs = twisted_power_sum(field, d, beta, k).specialize_t(theta ** (q**m))
                rep.check("specialization", {"d": d, "beta": beta, "k": k, "m": m},
                          power_sum(field, d, q**m * beta + k), lhs)
    for d in range(dtop + 1):
        for beta in range(1, 7):
            if q_length(beta, q) >= q:
                continue
            cut = q**d - (q ** (d - 1) if d else 0) * q_length(beta, q) - 1 if d else -1
            for k in range(max(cut, 0)):
                rep.check("vanishing", {"d": d, "beta": beta, "k": k},
                          TPoly.zero(field), twisted_power_sum(field, d, beta, k))
        for k in range(max_k + 1):
            rep.check("beta_zero", {"d": d, "k": k},
                      power_sum(field, d, k).embed(TPoly), twisted_power_sum(field, d, 0, k))
    return rep.report


def suite_specialpolys(field: FieldSpec, max_d: int, max_k: int, seed: int) -> VerifyReport:
    rep = _Recorder(VerifyReport("specialpolys"), field)
    q = field.q
    memo: dict = {}
    for beta in range(7):
        for k in range(max_k + 1):
            if beta + k == 0:
                continue
            inputs = {"beta": beta, "k": k}
            brute = z_brute(field, beta, k).z
            rec = z_recursive(field, beta, k, memo).z
            rep.check("recursion_vs_brute", inputs, brute, rec)
            if beta >= 1 and k >= 1:
                rep.check("exact_degree", inputs, phi_degree(field, beta, k), brute.degree)
            if beta == 0:
                rep.check("boeckle_degree", inputs, boeckle_degree(field, k), brute.degree)
            if k < 1:
                continue
            value = l_value(field, beta, k, memo)
            vanishes = (beta + k) % (q - 1) == 0
            rep.check("trivial_zero", inputs, vanishes, value.is_zero())
            if vanishes:
                rep.check("simple_zero", inputs, 1, trivial_zero_order(field, beta, k, memo))
            else:
                rep.check("constant_term_one", inputs, 1, value.coeff(0).coeff(0).index)
    return rep.report


def _maps(field: FieldSpec, d: int, rng: random.Random, count: int) -> list[LinearMapSpec]:
    maps = [LinearMapSpec.chi(field, d + 1), LinearMapSpec.identity(field, d + 1),
            LinearMapSpec.chi_frobenius(field, 1, d + 1)]
    maps += [LinearMapSpec.random(field, d + 1, rng) for _ in range(count)]
    return maps


def _scaled(poly: ZPoly, num: APoly, den: APoly) -> list:
    """Coefficients of (num/den) * poly as reduced fractions."""
    return [rational_reduce(c * num, den) for c in poly.coeffs]


def _lemma_recursive(field: FieldSpec, d: int, f: LinearMapSpec) -> tuple[list, list]:
    def normalized(n: int) -> list:
        fb = factorials(field, n)
        sign = -1 if n % 2 else 1
        return _scaled(p_approx(field, n, f), fb.L * sign, fb.D)

    upper = normalized(d + 1)
    alpha = alpha_decompose(field, d + 1, f)[d]
    ed = e_poly(field, d).coeffs
    lhs = [upper[j] if j < len(upper) else rational_reduce(TPoly.zero(field), APoly.one(field))
           for j in range(max(len(upper), len(ed)))]
    lhs = [lhs[j] - (alpha * ed[j] if j < len(ed) else 0) for j in range(len(lhs))]
    while lhs and lhs[-1].num.is_zero():
        lhs.pop()
    return normalized(d), lhs


def suite_approximation(field: FieldSpec, max_d: int, max_k: int, seed: int) -> VerifyReport:
    rep = _Recorder(VerifyReport("approximation"), field)
    rng = random.Random(seed)
    q = field.q
    small = _max_d(field, min(max_d, 2), 25)
    for d in range(small + 1):
        one = m_one(field, d)
        for idx, f in enumerate(_maps(field, d, rng, 10)):
            inputs = {"d": d, "map": idx, "name": f.name}
            m = carlitz_approx(field, d, f)
            for b in enumerate_monic(field, d):
                rep.check("interpolation", inputs, f(b) * one, m(b.embed(TPoly)))
            for c in enumerate_below(field, d):
                rep.check("fundamental_relation", inputs, (f(c) * one).embed(ZPoly), m.compose_shift(c) - m)
            pd = p_approx(field, d, f)
            rep.check("p_linear", inputs, True, pd.is_fq_linear())
            for c in enumerate_below(field, d):
                rep.check("p_values", inputs, f(c) * one, pd(c.embed(TPoly)))
            rep.check("affine", inputs, True, m.is_affine() and m.degree <= (q ** (d - 1) if d else 0))
            rep.check("constant_term", inputs, m.constant_term(), carlitz_constant(field, d, f))
        for beta in range(q**2 + 1):
            if beta and q_length(beta, q) >= q:
                continue
            rep.check("digit_principle", {"d": d, "beta": beta}, True, digit_principle_holds(field, d, beta))
        if d <= 1 or q <= 3:
            for beta in range(5):
                n = q**d + 4
                series = gen_series(field, d, beta, n)
                for k in range(n):
                    rep.check("gen_series", {"d": d, "beta": beta, "k": k},
                              twisted_power_sum(field, d, beta, k), series[k])
    wtop = _max_d(field, max(max_d, 4), 256)
    for d in range(wtop + 1):
        w = wagner_coeff(field, d)
        fb = factorials(field, d)
        rep.check("wagner_product", {"d": d}, wagner_product(field, d), w.b)
        rep.check("b_at_theta_qd", {"d": d}, fb.D, w.b.specialize_t(APoly.theta(field) ** (q**d)))
        if d >= 1:
            g = divide_by_t_minus_theta(w.b)
            lprev = factorials(field, d - 1).L
            rep.check("cofactor_at_theta", {"d": d}, lprev if d % 2 else -lprev,
                      g.specialize_t(APoly.theta(field)))
        if d <= 3:
            sign = -1 if d % 2 else 1
            rep.check("degree_sum", {"d": d}, rational_reduce(w.b * sign, fb.L), pellarin_degree_sum(field, d))
            for a in enumerate_below(field, d):
                rep.check("truncated_eval", {"d": d}, rational_reduce(chi_eval(a), APoly.one(field)),
                          wagner_truncated_eval(field, d, a))
    for d in range(min(2, _max_d(field, 3, 125) - 1) + 1):
        for idx, f in enumerate(_maps(field, d + 1, rng, 2)):
            lower, lhs = _lemma_recursive(field, d, f)
            rep.check("alpha_recursion", {"d": d, "map": idx, "name": f.name}, lower, lhs)
        chi = LinearMapSpec.chi(field, d + 1)
        fb = factorials(field, d)
        sign = -1 if d % 2 else 1
        lhs = rational_reduce(carlitz_constant(field, d, chi) * (fb.L * sign), fb.D)
        rhs = alpha_decompose(field, d + 1, chi)[d] * fb.D
        rep.check("alpha_top_coefficient", {"d": d}, lhs, rhs)
    return rep.report


_RUNNERS: dict[str, Callable[..., VerifyReport]] = {
    "algebra": suite_algebra,
    "carlitz": suite_carlitz,
    "powersums": suite_powersums,
    "specialpolys": suite_specialpolys,
    "approximation": suite_approximation,
}


def run_suites(field: FieldSpec, suite: str = "all", max_d: int = 2, max_k: int = 10,
               seed: int = 0) -> list[VerifyReport]:
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in _RUNNERS:
            raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return [_RUNNERS[name](field, max_d, max_k, seed) for name in names]
