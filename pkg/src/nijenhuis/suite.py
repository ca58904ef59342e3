"""Axiom registry and runner.

Each axiom yields one result per instance: ``None`` when the instance holds,
otherwise a dict of rendered expressions describing the counterexample.
Exhaustive axioms walk every basis word (or pair of words) inside the
configured bounds; randomized ones draw ``trials`` cases from a generator
seeded by ``(seed, axiom name)``, so results do not depend on which other
axioms were selected.

Axioms flagged ``expected_failure`` pass exactly when a counterexample turns
up. Right counicity is one: the cocycle coproduct is only left counital.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .bases import get_base
from .elements import ShuffleElement, Word
from .formats import parse_element, render_element, render_pair, render_triple
from .hopf import EndoHandle, NijenhuisHopfAlgebra, binomial_antipode_u, binomial_coproduct_u
from .rota_baxter import identity_sum, nij_from_stuffle, stuffle_u

REPORT_VERSION = 1


@dataclass(frozen=True)
class SuiteConfig:
    base: str = "onesided"
    max_len: int = 3
    max_exp: int = 2
    max_u: int = 6
    trials: int = 50
    seed: int = 0
    axioms: tuple[str, ...] = ()
    output: str = "text"
    max_degree: int = 5
    allow_inadmissible: bool = False

    def __post_init__(self):
        get_base(self.base)
        if self.max_len < 1:
            raise ValueError("max_len must be >= 1")
        for name in ("max_exp", "max_u", "trials", "max_degree"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.output not in ("text", "structured"):
            raise ValueError("output must be 'text' or 'structured'")
        object.__setattr__(self, "base", get_base(self.base).name)
        object.__setattr__(self, "axioms", tuple(self.axioms))


@dataclass
class AxiomResult:
    name: str
    anchor: str
    instances: int = 0
    passes: int = 0
    counterexample: dict | None = None
    status: str = "pass"
    reason: str | None = None

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "anchor": self.anchor,
            "instances": self.instances,
            "passes": self.passes,
            "status": self.status,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.reason is not None:
            d["reason"] = self.reason
        return d


@dataclass
class SuiteReport:
    config: SuiteConfig
    axioms: list[AxiomResult] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if all(a.status != "fail" for a in self.axioms) else "fail"

    def to_dict(self) -> dict:
        cfg = asdict(self.config)
        cfg["axioms"] = list(cfg["axioms"])
        return {
            "version": REPORT_VERSION,
            "config": cfg,
            "axioms": [a.to_dict() for a in self.axioms],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"base={self.config.base} seed={self.config.seed}"]
        for a in self.axioms:
            tail = f"{a.passes}/{a.instances}"
            if a.reason:
                tail += f" ({a.reason})"
            lines.append(f"{a.status.upper():>16}  {a.name:<26} {tail}")
            if a.counterexample and a.status in ("fail", "expected-failure"):
                for k, v in a.counterexample.items():
                    lines.append(f"{'':>18}{k}: {v}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


# --- registry ---------------------------------------------------------------


@dataclass
class _Context:
    alg: NijenhuisHopfAlgebra
    cfg: SuiteConfig
    rng: random.Random

    @property
    def trivial(self) -> bool:
        return self.alg.base.name == "trivial"

    def words(self) -> list[Word]:
        if self.trivial:
            return [(0,) * (n + 1) for n in range(self.cfg.max_u + 1)]
        return list(self.alg.words(self.cfg.max_len, self.cfg.max_exp))

    def el(self, w: Word) -> ShuffleElement:
        return ShuffleElement._raw({w: Fraction(1)})

    def show(self, x) -> str:
        u = self.trivial
        if isinstance(x, ShuffleElement):
            return render_element(x, u)
        if isinstance(x, tuple):
            return render_element(self.el(x), u)
        if hasattr(x, "_arity") and x._arity == 2:
            return render_pair(x, u)
        if hasattr(x, "_arity") and x._arity == 3:
            return render_triple(x, u)
        return str(x)

    def random_element(self, words: list[Word], max_terms: int = 4) -> ShuffleElement:
        terms = {}
        for _ in range(self.rng.randint(0, max_terms)):
            num = self.rng.choice([n for n in range(-9, 10) if n])
            terms[self.rng.choice(words)] = Fraction(num, self.rng.randint(1, 6))
        return ShuffleElement(terms)


@dataclass(frozen=True)
class Axiom:
    name: str
    anchor: str
    mode: str
    run: Callable[[_Context], Iterator[dict | None]]
    expected_failure: bool = False
    requires: str | None = None


def _cx(ctx: _Context, inputs, lhs, rhs) -> dict | None:
    if lhs == rhs:
        return None
    if not isinstance(inputs, (list, tuple)) or (inputs and isinstance(inputs[0], int)):
        inputs = [inputs]
    return {
        "input": " ; ".join(ctx.show(x) for x in inputs),
        "lhs": ctx.show(lhs),
        "rhs": ctx.show(rhs),
    }


def _pairs(ctx):
    words = ctx.words()
    return itertools.product(words, words)


def _ax_base(ctx):
    base = ctx.alg.base
    letters = list(base.letters(min(ctx.cfg.max_exp, 6)))

    def tensor_mul(p, q):
        out = {}
        for (a, b), c in p.items():
            for (x, y), d in q.items():
                for i, e in base.mul(a, x).items():
                    for j, f in base.mul(b, y).items():
                        out[(i, j)] = out.get((i, j), 0) + c * d * e * f
        return {k: v for k, v in out.items() if v}

    for i, j, k in itertools.product(letters, repeat=3):
        problems = []
        if base.mul(i, j) != base.mul(j, i):
            problems.append("commutativity")
        lhs = {}
        for a, c in base.mul(i, j).items():
            for b, d in base.mul(a, k).items():
                lhs[b] = lhs.get(b, 0) + c * d
        rhs = {}
        for a, c in base.mul(j, k).items():
            for b, d in base.mul(i, a).items():
                rhs[b] = rhs.get(b, 0) + c * d
        if lhs != rhs:
            problems.append("associativity")
        if any(base.degree(a) != base.degree(i) + base.degree(j) for a in base.mul(i, j)):
            problems.append("degree additivity")
        prod_cop = {}
        for a, c in base.mul(i, j).items():
            for key, d in base.coproduct(a).items():
                prod_cop[key] = prod_cop.get(key, 0) + c * d
        if {k2: v for k2, v in prod_cop.items() if v} != tensor_mul(base.coproduct(i), base.coproduct(j)):
            problems.append("coproduct multiplicative")
        if sum(c * base.counit(a) for a, c in base.mul(i, j).items()) != base.counit(i) * base.counit(j):
            problems.append("counit multiplicative")
        left3, right3 = {}, {}
        for (a, b), c in base.coproduct(i).items():
            for (x, y), d in base.coproduct(a).items():
                left3[(x, y, b)] = left3.get((x, y, b), 0) + c * d
            for (x, y), d in base.coproduct(b).items():
                right3[(a, x, y)] = right3.get((a, x, y), 0) + c * d
        if left3 != right3:
            problems.append("coassociativity")
        collapse = {}
        for (a, b), c in base.coproduct(i).items():
            collapse[b] = collapse.get(b, 0) + c * base.counit(a)
        if {b: v for b, v in collapse.items() if v} != {i: 1}:
            problems.append("left counicity")
        if problems:
            yield {"input": " ; ".join(ctx.show((a,)) for a in (i, j, k)), "failed": ", ".join(problems)}
        else:
            yield None


def _ax_nijenhuis(ctx):
    alg = ctx.alg
    for a, b in _pairs(ctx):
        ea, eb = ctx.el(a), ctx.el(b)
        pa, pb = alg.p_right(ea), alg.p_right(eb)
        lhs = alg.mul(pa, pb)
        rhs = (
            alg.p_right(alg.mul(ea, pb))
            + alg.p_right(alg.mul(pa, eb))
            - alg.p_right(alg.p_right(alg.mul(ea, eb)))
        )
        yield _cx(ctx, [a, b], lhs, rhs)


def _ax_commutativity(ctx):
    alg = ctx.alg
    for a, b in _pairs(ctx):
        yield _cx(ctx, [a, b], alg.mul(ctx.el(a), ctx.el(b)), alg.mul(ctx.el(b), ctx.el(a)))


def _ax_associativity(ctx):
    alg = ctx.alg
    words = ctx.words()
    for _ in range(ctx.cfg.trials):
        a, b, c = (ctx.random_element(words, 3) for _ in range(3))
        yield _cx(ctx, [a, b, c], alg.mul(alg.mul(a, b), c), alg.mul(a, alg.mul(b, c)))


def _ax_unit(ctx):
    alg = ctx.alg
    one = alg.unit()
    for w in ctx.words():
        e = ctx.el(w)
        yield _cx(ctx, w, alg.mul(one, e), e) or _cx(ctx, w, alg.mul(e, one), e)


def _ax_embedding(ctx):
    alg = ctx.alg
    letters = list(alg.base.letters(ctx.cfg.max_exp))
    for i, j in itertools.product(letters, repeat=2):
        expected = ShuffleElement({(k,): c for k, c in alg.base.mul(i, j).items()})
        yield _cx(ctx, [(i,), (j,)], alg.mul(ctx.el((i,)), ctx.el((j,))), expected)


def _ax_u_product(ctx):
    alg = ctx.alg
    for m, n in itertools.product(range(ctx.cfg.max_u + 1), repeat=2):
        yield _cx(ctx, [alg.make_u(m), alg.make_u(n)], alg.mul(alg.make_u(m), alg.make_u(n)), alg.make_u(m + n))


def _ax_coproduct_hom(ctx):
    alg = ctx.alg
    for a, b in _pairs(ctx):
        ea, eb = ctx.el(a), ctx.el(b)
        yield _cx(ctx, [a, b], alg.coproduct(alg.mul(ea, eb)), alg.pair_mul(alg.coproduct(ea), alg.coproduct(eb)))


def _ax_counit_hom(ctx):
    alg = ctx.alg
    for a, b in _pairs(ctx):
        ea, eb = ctx.el(a), ctx.el(b)
        yield _cx(ctx, [a, b], alg.counit(alg.mul(ea, eb)), alg.counit(ea) * alg.counit(eb))


def _ax_cocycle(ctx):
    alg = ctx.alg
    for w in ctx.words():
        e = ctx.el(w)
        yield _cx(ctx, w, alg.coproduct(alg.p_right(e)), alg.id_tensor_pr(alg.coproduct(e)))


def _ax_counit_shift(ctx):
    alg = ctx.alg
    for w in ctx.words():
        e = ctx.el(w)
        yield _cx(ctx, w, alg.counit(alg.p_right(e)), alg.counit(e))


def _ax_commutation(ctx):
    alg = ctx.alg
    for a, b in _pairs(ctx):
        p = alg.tensor(ctx.el(a), ctx.el(b))
        yield _cx(
            ctx, [a, b], alg.id_tensor_coproduct(alg.id_tensor_pr(p)), alg.id_id_tensor_pr(alg.id_tensor_coproduct(p))
        ) or _cx(
            ctx, [a, b], alg.coproduct_tensor_id(alg.id_tensor_pr(p)), alg.id_id_tensor_pr(alg.coproduct_tensor_id(p))
        )


def _ax_coassociativity(ctx):
    alg = ctx.alg
    for w in ctx.words():
        d = alg.coproduct(ctx.el(w))
        yield _cx(ctx, w, alg.id_tensor_coproduct(d), alg.coproduct_tensor_id(d))


def _ax_left_counit(ctx):
    alg = ctx.alg
    for w in ctx.words():
        e = ctx.el(w)
        yield _cx(ctx, w, alg.counit_left(alg.coproduct(e)), e)


_RIGHT_COUNIT_WITNESS = {"binomial": (1, 1), "onesided": (1,), "trivial": (0, 0)}


def _ax_right_counit(ctx):
    alg = ctx.alg
    words = ctx.words()
    witness = _RIGHT_COUNIT_WITNESS.get(alg.base.name)
    if witness is not None:
        words = [witness] + [w for w in words if w != witness]
    for w in words:
        e = ctx.el(w)
        _, value = alg.right_counit_check(e)
        yield _cx(ctx, w, value, e)


def _graded_words(ctx, top: int) -> dict[int, list[Word]]:
    return {n: list(ctx.alg.words_of_degree(n)) for n in range(top + 1)}


def _ax_grading(ctx):
    alg = ctx.alg
    by_degree = _graded_words(ctx, ctx.cfg.max_degree)
    for p in by_degree:
        for q in range(ctx.cfg.max_degree - p + 1):
            for a in by_degree[p]:
                for b in by_degree[q]:
                    prod = alg.mul(ctx.el(a), ctx.el(b))
                    bad = [w for w in prod.keys() if alg.degree(w) != p + q]
                    yield None if not bad else {
                        "input": f"{ctx.show(a)} ; {ctx.show(b)}",
                        "lhs": ctx.show(prod),
                        "rhs": f"homogeneous of degree {p + q}",
                    }


def _ax_filtration(ctx):
    alg = ctx.alg
    for n, words in _graded_words(ctx, ctx.cfg.max_degree).items():
        for w in words:
            if alg.coproduct_in_filtration(w):
                yield None
            else:
                yield {
                    "input": ctx.show(w),
                    "lhs": ctx.show(alg.coproduct(ctx.el(w))),
                    "rhs": f"inside U0 (x) U{n} + sum of Up (x) Uq with p, q > 0",
                }


def _ax_degree_drop(ctx):
    alg = ctx.alg
    for w in ctx.words():
        n = alg.degree(w)
        red = alg.reduced_coproduct(ctx.el(w))
        bad = [r for (_, r) in red.keys() if alg.degree(r) >= n]
        yield None if not bad else {
            "input": ctx.show(w),
            "lhs": ctx.show(red),
            "rhs": f"right legs of degree < {n}",
        }


def _ax_right_antipode(ctx):
    alg = ctx.alg
    exploratory = ctx.cfg.allow_inadmissible
    for w in ctx.words():
        e = ctx.el(w)
        try:
            lhs = alg.convolve(EndoHandle.IDENTITY, EndoHandle.ANTIPODE, e, exploratory=exploratory)
        except RuntimeError as exc:
            yield {"input": ctx.show(w), "error": str(exc)}
            continue
        yield _cx(ctx, w, lhs, alg.unit(alg.counit(e)))


def _ax_antipode_u(ctx):
    alg = ctx.alg
    for n in range(ctx.cfg.max_u + 1):
        yield _cx(ctx, alg.make_u(n), alg.antipode(alg.make_u(n)), alg.unit())


def _ax_left_unit(ctx):
    alg = ctx.alg
    for w in ctx.words():
        e = ctx.el(w)
        yield _cx(ctx, w, alg.convolve(EndoHandle.UNIT_COUNIT, EndoHandle.IDENTITY, e), e)


def _ax_binomial_hopf(ctx):
    from math import comb

    alg = ctx.alg
    for n in range(ctx.cfg.max_u + 1):
        u = alg.make_u(n)
        d = binomial_coproduct_u(alg, n)
        coeffs_ok = all(d.coefficient(((0,) * (i + 1), (0,) * (n - i + 1))) == comb(n, i) for i in range(n + 1))
        expected = alg.unit(1 if n == 0 else 0)
        left = alg.convolve(EndoHandle.IDENTITY, EndoHandle.BINOMIAL_ANTIPODE, u, coproduct="binomial")
        right = alg.convolve(EndoHandle.BINOMIAL_ANTIPODE, EndoHandle.IDENTITY, u, coproduct="binomial")
        sign_ok = binomial_antipode_u(alg, n) == (-1) ** n * u
        if coeffs_ok and sign_ok and left == expected and right == expected:
            yield None
        else:
            yield {
                "input": ctx.show(u),
                "coproduct": ctx.show(d),
                "id*S": ctx.show(left),
                "S*id": ctx.show(right),
            }


def _ax_identity(ctx):
    for m, n in itertools.product(range(ctx.cfg.max_u + 1), repeat=2):
        value = identity_sum(m, n)
        yield None if value == 1 else {"input": f"m={m}, n={n}", "lhs": str(value), "rhs": "1"}


def _ax_stuffle_substitution(ctx):
    alg = ctx.alg
    for m, n in itertools.product(range(ctx.cfg.max_u + 1), repeat=2):
        yield _cx(ctx, [alg.make_u(m), alg.make_u(n)], nij_from_stuffle(alg, m, n), alg.mul(alg.make_u(m), alg.make_u(n)))


def _ax_stuffle_properties(ctx):
    from math import comb

    alg = ctx.alg
    for m, n in itertools.product(range(ctx.cfg.max_u + 1), repeat=2):
        lam = Fraction(ctx.rng.randint(-5, 5), ctx.rng.randint(1, 4))
        yield _cx(ctx, [alg.make_u(m), alg.make_u(n)], stuffle_u(alg, m, n, lam), stuffle_u(alg, n, m, lam)) or _cx(
            ctx, [alg.make_u(m), alg.make_u(n)], stuffle_u(alg, m, n, 0), comb(m + n, m) * alg.make_u(m + n)
        )


def _ax_round_trip(ctx):
    base = ctx.alg.base
    words = ctx.words()
    for _ in range(ctx.cfg.trials):
        e = ctx.random_element(words)
        for u in (False, True) if ctx.trivial else (False,):
            text = render_element(e, u)
            back = parse_element(text, base)
            if back != e:
                yield {"input": text, "lhs": render_element(back), "rhs": render_element(e)}
                break
        else:
            yield None


AXIOMS: list[Axiom] = [
    Axiom("base-bialgebra", "base algebra: commutative, associative, left counital, coassociative", "exhaustive", _ax_base),
    Axiom("nijenhuis-identity", "P(x)P(y) = P(P(x)y) + P(xP(y)) - P^2(xy)", "exhaustive", _ax_nijenhuis),
    Axiom("commutativity", "a * b = b * a", "exhaustive", _ax_commutativity),
    Axiom("associativity", "(a * b) * c = a * (b * c)", "randomized", _ax_associativity),
    Axiom("unit-law", "1_A * a = a = a * 1_A", "exhaustive", _ax_unit),
    Axiom("embedding-homomorphism", "j_A(ab) = j_A(a) * j_A(b)", "exhaustive", _ax_embedding),
    Axiom("u-product", "u_m * u_n = u_(m+n)", "exhaustive", _ax_u_product, requires="trivial"),
    Axiom("coproduct-homomorphism", "D(a * b) = D(a) . D(b)", "exhaustive", _ax_coproduct_hom),
    Axiom("counit-homomorphism", "eps(a * b) = eps(a) eps(b)", "exhaustive", _ax_counit_hom),
    Axiom("cocycle", "D P = (id (x) P) D", "exhaustive", _ax_cocycle),
    Axiom("counit-shift", "eps(P(a)) = eps(a)", "exhaustive", _ax_counit_shift),
    Axiom("shift-commutation", "(id (x) D)(id (x) P) = (id (x) id (x) P)(id (x) D), same for D (x) id", "exhaustive", _ax_commutation),
    Axiom("coassociativity", "(id (x) D) D = (D (x) id) D", "exhaustive", _ax_coassociativity),
    Axiom("left-counicity", "(eps (x) id) D = beta_l", "exhaustive", _ax_left_counit),
    Axiom("right-counicity", "(id (x) eps) D != beta_r", "exhaustive", _ax_right_counit, expected_failure=True),
    Axiom("grading-multiplicativity", "deg(a * b) = deg(a) + deg(b)", "exhaustive", _ax_grading, requires="admissible"),
    Axiom("coproduct-filtration", "D(U^n) in U^0 (x) U^n + sum_{p,q>0} U^p (x) U^q", "exhaustive", _ax_filtration, requires="admissible"),
    Axiom("reduced-degree-drop", "D(x) = 1 (x) x + reduced, right legs of lower degree", "exhaustive", _ax_degree_drop, requires="admissible"),
    Axiom("right-antipode", "(id * S)(x) = e(x)", "exhaustive", _ax_right_antipode, requires="admissible"),
    Axiom("antipode-u", "S(u_n) = 1_A", "exhaustive", _ax_antipode_u, requires="trivial"),
    Axiom("convolution-left-unit", "e * f = f", "exhaustive", _ax_left_unit),
    Axiom("binomial-hopf", "D(u_n) = sum C(n,i) u_i (x) u_(n-i), S(u_n) = (-1)^n u_n", "exhaustive", _ax_binomial_hopf, requires="trivial"),
    Axiom("combinatorial-identity", "sum_k (-1)^k C(m+n-k, m) C(m, k) = 1", "exhaustive", _ax_identity),
    Axiom("stuffle-substitution", "lambda -> -P turns the stuffle product into u_m * u_n", "exhaustive", _ax_stuffle_substitution, requires="trivial"),
    Axiom("stuffle-properties", "stuffle symmetric in (m, n); weight 0 gives C(m+n, m) u_(m+n)", "exhaustive", _ax_stuffle_properties, requires="trivial"),
    Axiom("round-trip", "parse(render(e)) = e", "randomized", _ax_round_trip),
]

AXIOM_NAMES = [a.name for a in AXIOMS]
ALIASES = {"id*S=e": "right-antipode", "id∗S=e": "right-antipode", "Nij": "nijenhuis-identity"}


def resolve_axioms(names) -> list[Axiom]:
    if not names or "all" in names:
        return list(AXIOMS)
    wanted = []
    for n in names:
        n = ALIASES.get(n, n)
        if n not in AXIOM_NAMES:
            raise ValueError(f"unknown axiom {n!r}; known: {', '.join(AXIOM_NAMES)}")
        if n not in wanted:
            wanted.append(n)
    return [a for a in AXIOMS if a.name in wanted]


def _skip_reason(axiom: Axiom, ctx: _Context) -> str | None:
    base = ctx.alg.base
    if axiom.requires == "trivial" and base.name != "trivial":
        return f"needs the trivial base, not {base.name!r}"
    if axiom.requires == "admissible" and not base.admissible and not ctx.cfg.allow_inadmissible:
        return f"base {base.name!r} is not antipode-admissible (one-sided grading fails)"
    return None


def run_axiom_suite(cfg: SuiteConfig) -> SuiteReport:
    alg = NijenhuisHopfAlgebra(cfg.base)
    report = SuiteReport(cfg)
    for axiom in resolve_axioms(cfg.axioms):
        ctx = _Context(alg, cfg, random.Random(f"{cfg.seed}:{axiom.name}"))
        result = AxiomResult(axiom.name, axiom.anchor)
        reason = _skip_reason(axiom, ctx)
        if reason is not None:
            result.status, result.reason = "skipped", reason
            report.axioms.append(result)
            continue
        for outcome in axiom.run(ctx):
            result.instances += 1
            if outcome is None:
                result.passes += 1
            elif result.counterexample is None:
                result.counterexample = outcome
        failed = result.passes < result.instances
        if axiom.expected_failure:
            result.status = "expected-failure" if failed else "fail"
            if not failed:
                result.reason = "expected a counterexample but none was found"
        else:
            result.status = "fail" if failed else "pass"
        report.axioms.append(result)
    return report
