"""
Verificações por álgebra linear exata sobre os complexos explícitos.

Cada verificação devolve um ``CheckResult``; ``verify_relative`` e
``verify_absolute`` agregam tudo num ``VerificationReport`` no formato
``{instance, ok, checks: [{name, status, details}]}``.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from relbgg import linalg
from relbgg.chevalley.basis import ChevalleyBasis
from relbgg.chevalley.complex import DUALITY_SIGN, AbsoluteComplex, LieComplex, RelativeComplex
from relbgg.chevalley.irrep import ExplicitRep, casimir_operator, levi_basis
from relbgg.homology import absolute_homology, factorized_homology, homology_dimensions, laplacian_scalar, relative_homology
from relbgg.oracle import weyl_dimension
from relbgg.parabolic import ParabolicPair, is_dominant, levi_delta, levi_nodes, partition, sigma_height
from relbgg.rootsys import add_weights, format_weight, neg_weight

logger = logging.getLogger(__name__)


def _number(value) -> Any:
    value = Fraction(value)
    return int(value) if value.denominator == 1 else str(value)


@dataclass
class CheckResult:
    name: str
    status: str
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "status": self.status, "details": self.details}


def _result(name: str, failures: List[Any], **details) -> CheckResult:
    if failures:
        details["failures"] = failures[:20]
        logger.warning(f"Verificação {name} falhou: {failures[:3]}")
    return CheckResult(name=name, status="fail" if failures else "pass", details=details)


@dataclass
class VerificationReport:
    instance: Dict[str, Any]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def get(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    def to_dict(self) -> Dict[str, Any]:
        return {"instance": self.instance, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


# ========== GERADORES ==========

def q0_generators(cb: ChevalleyBasis, pair: ParabolicPair) -> List[int]:
    """e_i, f_i dos nós não cruzados em q e todos os h_i."""
    rs = cb.rs
    gens = []
    for i in levi_nodes(pair.sigma_q, rs):
        gens.extend([cb.e(rs.simple_root(i)), cb.f(rs.simple_root(i))])
    gens.extend(cb.h(i) for i in rs.nodes)
    return gens


def q_basis(cb: ChevalleyBasis, pair: ParabolicPair) -> List[int]:
    """Base de Chevalley de q: todos os e_alpha, os h_i e f_alpha com alpha em q0."""
    q0 = partition(pair, cb.rs).q0
    return (
        [cb.e(r) for r in cb.rs.positive_roots]
        + [cb.h(i) for i in cb.rs.nodes]
        + [cb.f(r) for r in q0]
    )


# ========== REPRESENTAÇÕES ==========

def representation_check(rep: ExplicitRep, cb: ChevalleyBasis) -> CheckResult:
    failures = [{"pair": [cb.label(a), cb.label(b)]} for a, b in rep.representation_violations(cb)]
    return _result("representation", failures, dim=rep.dim)


def casimir_check(rep: ExplicitRep, cb: ChevalleyBasis, levi_sigma, weight: Sequence) -> CheckResult:
    """O Casimir do Levi age por ||lambda+delta_L||² - ||delta_L||²."""
    rs = cb.rs
    shift = levi_delta(levi_sigma, rs)
    scalar = rs.norm_sq(add_weights(weight, shift)) - rs.norm_sq(shift)
    casimir = casimir_operator(rep, cb, levi_basis(cb, levi_sigma))
    failures = []
    if not linalg.equal(casimir, linalg.scale(linalg.identity(rep.dim), scalar)):
        failures.append({"expected": _number(scalar)})
    return _result("casimir", failures, scalar=_number(scalar))


# ========== COMPLEXO RELATIVO ==========

def complex_check(cx: LieComplex) -> CheckResult:
    """d_star² = 0 (e d² = 0 quando o diferencial transportado existe)."""
    failures = []
    for k in range(cx.n + 2):
        if not linalg.is_zero(linalg.mul(cx.d_star(k - 1), cx.d_star(k))):
            failures.append({"map": "d_star", "k": k})
    if isinstance(cx, RelativeComplex):
        for k in range(-1, cx.n + 1):
            if not linalg.is_zero(linalg.mul(cx.d(k + 1), cx.d(k))):
                failures.append({"map": "d", "k": k})
    return _result("complex", failures, dims=[cx.chain_dim(k) for k in cx.degrees])


def equivariance_check(cx: RelativeComplex) -> CheckResult:
    """d_star e box comutam com a ação de q0."""
    failures = []
    for x in q0_generators(cx.cb, cx.pair):
        for k in cx.degrees:
            act_k = cx.action(x, k)
            act_prev = cx.action(x, k - 1)
            if not linalg.equal(linalg.mul(cx.d_star(k), act_k), linalg.mul(act_prev, cx.d_star(k))):
                failures.append({"element": cx.cb.label(x), "k": k, "map": "d_star"})
            if not linalg.equal(linalg.mul(cx.box(k), act_k), linalg.mul(act_k, cx.box(k))):
                failures.append({"element": cx.cb.label(x), "k": k, "map": "box"})
    return _result("equivariance", failures)


def hodge_check(cx: RelativeComplex) -> CheckResult:
    """C_k = im(d_star) ⊕ ker(box) ⊕ im(d) com ker(d_star) = im(d_star) ⊕ ker(box)."""
    failures = []
    rows = []
    for k in cx.degrees:
        ker_dstar = linalg.kernel(cx.d_star(k))
        im_dstar = linalg.image(cx.d_star(k + 1))
        ker_d = linalg.kernel(cx.d(k))
        im_d = linalg.image(cx.d(k - 1))
        harmonic = linalg.kernel(cx.box(k))
        dims = {
            "k": k,
            "chain": cx.chain_dim(k),
            "im_d_star": im_dstar.shape[1],
            "harmonic": harmonic.shape[1],
            "im_d": im_d.shape[1],
        }
        rows.append(dims)
        if linalg.intersection_dim(ker_dstar, im_d):
            failures.append({"k": k, "identity": "ker(d_star) ∩ im(d) = 0"})
        if linalg.intersection_dim(ker_d, im_dstar):
            failures.append({"k": k, "identity": "ker(d) ∩ im(d_star) = 0"})
        if dims["im_d_star"] + dims["harmonic"] + dims["im_d"] != dims["chain"]:
            failures.append({"k": k, "identity": "soma das dimensões"})
        inner = linalg.hstack(im_dstar, harmonic)
        if (
            linalg.rank(inner) != dims["im_d_star"] + dims["harmonic"]
            or ker_dstar.shape[1] != dims["im_d_star"] + dims["harmonic"]
            or not linalg.contains(ker_dstar, inner)
        ):
            failures.append({"k": k, "identity": "ker(d_star) = im(d_star) ⊕ ker(box)"})
    return _result("hodge", failures, degrees=rows)


def homology_dimension_check(cx: RelativeComplex) -> CheckResult:
    """Homologia, cohomologia e ker(box) contra a soma das dimensões de Weyl."""
    predicted = homology_dimensions(cx.weight, cx.pair, cx.rs)
    homology = cx.homology_dims()
    cohomology = cx.cohomology_dims()
    failures = []
    for k in cx.degrees:
        expected = predicted.get(k, 0)
        harmonic = linalg.kernel(cx.box(k)).shape[1]
        if (homology[k], cohomology[k], harmonic) != (expected, expected, expected):
            failures.append({"k": k, "homology": homology[k], "cohomology": cohomology[k],
                             "harmonic": harmonic, "expected": expected})
    return _result("homology-dimensions", failures,
                   homology=[homology[k] for k in cx.degrees],
                   expected=[predicted.get(k, 0) for k in cx.degrees])


def laplacian_isotypic_check(cx: RelativeComplex, weight: Sequence, pair: ParabolicPair) -> CheckResult:
    """box age em cada componente isotípica pelo escalar ½(||lambda+delta_p||² - ||nu+delta_p||²).

    Os vetores de peso mínimo são o núcleo comum dos f_i de q0 em cada espaço
    de peso; o escalar é conferido neles e nos vetores obtidos subindo com e_i.
    """
    rs, cb = cx.rs, cx.cb
    orbit = {e.nu for e in relative_homology(weight, pair, rs)}
    levi_q = levi_nodes(pair.sigma_q, rs)
    failures = []
    seen = []
    for k in cx.degrees:
        dim = cx.chain_dim(k)
        if not dim:
            continue
        box = cx.box(k)
        lowering = [cx.action(cb.f(rs.simple_root(i)), k) for i in levi_q]
        raising = [cx.action(cb.e(rs.simple_root(i)), k) for i in levi_q]
        groups: Dict[Tuple, List[int]] = defaultdict(list)
        for index, mu in enumerate(cx.weights(k)):
            groups[mu].append(index)
        for mu, indices in groups.items():
            if lowering:
                stacked = linalg.vstack(*[linalg.extract(m, range(dim), indices) for m in lowering])
                lowest = linalg.kernel(stacked)
            else:
                lowest = linalg.identity(len(indices))
            if not lowest.shape[1]:
                continue
            vectors = linalg.embed(lowest, indices, dim)
            nu = neg_weight(mu)
            scalar = laplacian_scalar(weight, nu, pair, rs)
            seen.append({"k": k, "nu": format_weight(nu), "scalar": _number(scalar), "count": vectors.shape[1]})
            if nu not in orbit and scalar <= 0:
                failures.append({"k": k, "nu": format_weight(nu), "reason": "escalar não positivo fora da órbita"})
            frontier = vectors
            depth = 0
            while frontier.shape[1]:
                if not linalg.equal(linalg.mul(box, frontier), linalg.scale(frontier, scalar)):
                    failures.append({"k": k, "nu": format_weight(nu), "raised": depth, "expected": _number(scalar)})
                    break
                if not raising:
                    break
                frontier = linalg.image(linalg.hstack(*[linalg.mul(e, frontier) for e in raising]))
                depth += 1
    return _result("laplacian-isotypic", failures, components=seen)


def _p0_complex(cx: RelativeComplex) -> Tuple[LieComplex, List[int], int]:
    """C_*(p0, V) com geradores [f mid] + [e mid] + [e, f de q0] + [h]; devolve também a fronteira q-/q."""
    cb, part = cx.cb, cx.partition
    minus = [cb.f(r) for r in part.mid]
    plus = [cb.e(r) for r in part.mid]
    plus += [x for r in part.q0 for x in (cb.e(r), cb.f(r))]
    plus += [cb.h(i) for i in cx.rs.nodes]
    gens = minus + plus
    return LieComplex(cb, gens, cx.rep, name=f"C(p0, {cx.rep.label})"), gens, len(minus)


def _inclusion(cx: RelativeComplex, big: LieComplex, offset: int, k: int) -> DomainMatrix:
    entries = {}
    for subset in cx.subsets(k):
        target = tuple(offset + s for s in subset)
        for v in range(cx.dim_v):
            entries[(big.index(target, v), cx.index(subset, v))] = 1
    return linalg.sparse(entries, (big.chain_dim(k), cx.chain_dim(k)))


def _casimir_side(cx: RelativeComplex, big: LieComplex, gens: List[int], n_minus: int, k: int,
                  inclusion: DomainMatrix, transform: List[Dict[int, Fraction]]) -> DomainMatrix:
    """½(-Σ L^V_eta L^V_xi - Σ_{xi ∈ q-} L_eta L_xi + Σ_{xi ∈ q} L_eta L_xi) ∘ j.

    ``transform[a]`` escreve xi_a nas posições de ``gens``; eta é a base dual
    para o emparelhamento DUALITY_SIGN · B.
    """
    cb = cx.cb
    size = len(transform)
    elements = [{gens[pos]: coef for pos, coef in row.items()} for row in transform]
    gram = linalg.from_rows([
        [DUALITY_SIGN * cb.killing_vectors(elements[a], elements[b]) for b in range(size)] for a in range(size)
    ])
    dual = linalg.to_fraction_rows(linalg.inverse(gram))
    shape = (big.chain_dim(k), big.chain_dim(k))

    def combine(row: Dict[int, Fraction], coefficient_only: bool) -> DomainMatrix:
        act = big.coefficient_action if coefficient_only else big.action
        return linalg.total((linalg.scale(act(gens[pos], k), coef) for pos, coef in row.items()), shape)

    full = [combine(row, False) for row in transform]
    coeff = [combine(row, True) for row in transform]
    full_j = [linalg.mul(m, inclusion) for m in full]
    coeff_j = [linalg.mul(m, inclusion) for m in coeff]
    terms = []
    for c in range(size):
        sign = -1 if c < n_minus else 1
        for b in range(size):
            m_bc = dual[b][c]
            if not m_bc:
                continue
            terms.append(linalg.scale(linalg.mul(coeff[b], coeff_j[c]), -m_bc))
            terms.append(linalg.scale(linalg.mul(full[b], full_j[c]), sign * m_bc))
    return linalg.scale(linalg.total(terms, inclusion.shape), Fraction(1, 2))


def _second_basis(gens: List[int], cb: ChevalleyBasis) -> List[Dict[int, Fraction]]:
    """Outra base de p0 compatível com q- ∩ p0 ⊕ q ∩ p0: vetores de raiz reescalados e h misturados."""
    scales = [Fraction(2), Fraction(-1), Fraction(1, 3), Fraction(-3), Fraction(1, 2)]
    cartan = [pos for pos, g in enumerate(gens) if cb.is_cartan(g)]
    rows = []
    for pos, g in enumerate(gens):
        if cb.is_cartan(g):
            later = [p for p in cartan if p >= pos]
            rows.append({p: Fraction(1) if p == pos else Fraction(1, 2) for p in later})
        else:
            rows.append({pos: scales[pos % len(scales)]})
    return rows


def casimir_formula_check(cx: RelativeComplex, cb: ChevalleyBasis) -> CheckResult:
    """j∘box igual à expressão do tipo Casimir em C_*(p0, V), para duas bases de p0."""
    big, gens, n_minus = _p0_complex(cx)
    standard = [{pos: Fraction(1)} for pos in range(len(gens))]
    other = _second_basis(gens, cb)
    failures = []
    for k in cx.degrees:
        inclusion = _inclusion(cx, big, n_minus, k)
        lhs = linalg.mul(inclusion, cx.box(k))
        first = _casimir_side(cx, big, gens, n_minus, k, inclusion, standard)
        if not linalg.equal(lhs, first):
            failures.append({"k": k, "basis": "chevalley"})
        second = _casimir_side(cx, big, gens, n_minus, k, inclusion, other)
        if not linalg.equal(first, second):
            failures.append({"k": k, "basis": "reescalada"})
    return _result("casimir-formula", failures, p0_dim=len(gens))


def _grades(cx: RelativeComplex, k: int) -> List[Fraction]:
    rs, sigma_q = cx.rs, tuple(cx.pair.sigma_q)
    gen_grades = [sigma_height(cx.cb.root_of(g), sigma_q) for g in cx.generators]
    v_grades = [sum((rs.weight_to_root(w)[i - 1] for i in sigma_q), Fraction(0)) for w in cx.rep.weights]
    out = []
    for subset in cx.subsets(k):
        base = sum(gen_grades[p] for p in subset)
        out.extend(base + g for g in v_grades)
    return out


def grading_check(cx: RelativeComplex, pair: ParabolicPair) -> CheckResult:
    """d_star preserva a graduação por E_q; q preserva a filtração e q+ sobe estritamente."""
    cb = cx.cb
    failures = []
    grades = {k: _grades(cx, k) for k in range(-1, cx.n + 1)}
    for k in cx.degrees:
        for row, col, _ in linalg.items(cx.d_star(k)):
            if grades[k - 1][row] != grades[k][col]:
                failures.append({"map": "d_star", "k": k, "monomial": col})
                break
    for x in q_basis(cb, pair):
        shift = sigma_height(cb.root_of(x), tuple(pair.sigma_q))
        for k in cx.degrees:
            for row, col, _ in linalg.items(cx.action(x, k)):
                step = grades[k][row] - grades[k][col]
                if step != shift:
                    failures.append({"element": cb.label(x), "k": k, "monomial": col, "step": _number(step)})
                    break
    return _result("grading", failures)


def homotopy_formula_check(cx: RelativeComplex) -> CheckResult:
    """Z·phi = -d_star(Z∧phi) - Z∧d_star(phi) para Z em q+ ∩ p0; p+ age por zero; q+·ker ⊆ im."""
    cb = cx.cb
    failures = []
    for pos, z in enumerate(cx.generators):
        for k in cx.degrees:
            lhs = cx.action(z, k)
            rhs = linalg.scale(
                linalg.add(
                    linalg.mul(cx.d_star(k + 1), cx.wedge(pos, k)),
                    linalg.mul(cx.wedge(pos, k - 1), cx.d_star(k)),
                ),
                -1,
            )
            if not linalg.equal(lhs, rhs):
                failures.append({"element": cb.label(z), "k": k, "identity": "homotopia"})
            if not linalg.contains(cx.boundaries(k), linalg.mul(lhs, cx.cycles(k))):
                failures.append({"element": cb.label(z), "k": k, "identity": "q+ ker ⊆ im"})
    for root in cx.partition.pplus:
        z = cb.e(root)
        for k in cx.degrees:
            if not linalg.is_zero(cx.action(z, k)):
                failures.append({"element": cb.label(z), "k": k, "identity": "p+ age por zero"})
    return _result("homotopy-formula", failures)


def verify_relative(weight, pair: ParabolicPair, cb: ChevalleyBasis, cx: Optional[RelativeComplex] = None) -> VerificationReport:
    """Todas as verificações do complexo relativo C_*(q+/p+, V)."""
    cx = cx or RelativeComplex(weight, pair, cb)
    report = VerificationReport(instance=_instance(cb, pair, cx.weight, "relative"))
    report.add(representation_check(cx.rep, cb))
    report.add(casimir_check(cx.rep, cb, pair.sigma_p, cx.weight))
    report.add(complex_check(cx))
    report.add(equivariance_check(cx))
    report.add(hodge_check(cx))
    report.add(homology_dimension_check(cx))
    report.add(laplacian_isotypic_check(cx, cx.weight, pair))
    report.add(casimir_formula_check(cx, cb))
    report.add(grading_check(cx, pair))
    report.add(homotopy_formula_check(cx))
    logger.info(f"Verificação relativa {cx.name}: {'ok' if report.ok else 'FALHOU'}")
    return report


def _instance(cb: ChevalleyBasis, pair: ParabolicPair, weight, kind: str) -> Dict[str, Any]:
    return {
        "kind": kind,
        "algebra": cb.rs.label,
        "sigma_p": sorted(pair.sigma_p),
        "sigma_q": sorted(pair.sigma_q),
        "lambda": [_number(x) for x in weight],
    }


# ========== COMPLEXO ABSOLUTO ==========

def absolute_relations_check(ax: AbsoluteComplex) -> CheckResult:
    """∂*_1² = 0, ∂*_2² = 0, ∂*_1∂*_2 = -∂*_2∂*_1, soma = d_star e ∂*_2 = (-1)^r id ⊗ ∂*_p."""
    failures = []
    for k in ax.degrees:
        first, second = ax.components(k)
        if not linalg.equal(ax.d_star(k), linalg.add(first, second)):
            failures.append({"k": k, "relation": "d_star = ∂*_1 + ∂*_2"})
        if not linalg.equal(second, ax.p_lift(k)):
            failures.append({"k": k, "relation": "∂*_2 = (-1)^r id⊗∂*_p"})
        if k >= 2:
            prev_first, prev_second = ax.components(k - 1)
            if not linalg.is_zero(linalg.mul(prev_first, first)):
                failures.append({"k": k, "relation": "∂*_1² = 0"})
            if not linalg.is_zero(linalg.mul(prev_second, second)):
                failures.append({"k": k, "relation": "∂*_2² = 0"})
            if not linalg.is_zero(linalg.add(linalg.mul(prev_first, second), linalg.mul(prev_second, first))):
                failures.append({"k": k, "relation": "∂*_1∂*_2 + ∂*_2∂*_1 = 0"})
    return _result("double-complex", failures)


def absolute_homology_check(ax: AbsoluteComplex) -> CheckResult:
    expected: Dict[int, int] = {}
    for entry in absolute_homology(ax.weight, ax.pair.sigma_q, ax.rs):
        expected[entry.degree] = expected.get(entry.degree, 0) + weyl_dimension(entry.nu, ax.pair.sigma_q, ax.rs)
    dims = ax.homology_dims()
    failures = [
        {"k": k, "homology": dims[k], "expected": expected.get(k, 0)}
        for k in ax.degrees if dims[k] != expected.get(k, 0)
    ]
    return _result("absolute-homology", failures, homology=[dims[k] for k in ax.degrees])


def filtration(ell: int, ax: AbsoluteComplex) -> Dict[int, List[int]]:
    """F^ℓ_k como índices dos monômios com s >= ℓ, para cada grau k."""
    return {k: ax.filtration_indices(ell, k) for k in ax.degrees}


def filtration_check(ax: AbsoluteComplex) -> CheckResult:
    """Cadeia decrescente F^0 ⊇ … ⊇ F^{r+1} = 0, d_star(F^ℓ) ⊆ F^{ℓ-1} e invariância por q."""
    failures = []
    levels = {ell: filtration(ell, ax) for ell in range(ax.r + 2)}
    for k in ax.degrees:
        if len(levels[0][k]) != ax.chain_dim(k):
            failures.append({"k": k, "property": "F^0 = C_k"})
        if levels[ax.r + 1][k]:
            failures.append({"k": k, "property": "F^{r+1} = 0"})
        for ell in range(ax.r + 1):
            if not set(levels[ell + 1][k]) <= set(levels[ell][k]):
                failures.append({"k": k, "ell": ell, "property": "decrescente"})
        for row, col, _ in linalg.items(ax.d_star(k)):
            if ax.bidegree(k - 1, row)[1] < ax.bidegree(k, col)[1] - 1:
                failures.append({"k": k, "property": "d_star(F^ℓ) ⊆ F^{ℓ-1}", "monomial": col})
                break
    for x in q_basis(ax.cb, ax.pair):
        for k in ax.degrees:
            for row, col, _ in linalg.items(ax.action(x, k)):
                if ax.bidegree(k, row)[1] < ax.bidegree(k, col)[1]:
                    failures.append({"element": ax.cb.label(x), "k": k, "property": "q preserva F^ℓ"})
                    break
    dims = {str(ell): [len(levels[ell][k]) for k in ax.degrees] for ell in levels}
    return _result("filtration", failures, r=ax.r, dims=dims)


def _homology_projector(cycles: DomainMatrix, boundaries: DomainMatrix, ambient: int) -> Tuple[DomainMatrix, DomainMatrix]:
    """(representantes, projeção C -> H) com a projeção correta nos ciclos."""
    reps = linalg.complement(boundaries, cycles)
    known = linalg.hstack(boundaries, reps)
    extra = linalg.complement(known, linalg.identity(ambient))
    coords = linalg.inverse(linalg.hstack(known, extra))
    nb, nr = boundaries.shape[1], reps.shape[1]
    return reps, linalg.extract(coords, range(nb, nb + nr), range(ambient))


class _ProjectionLevel:
    """Dados de um nível ℓ: H_ℓ(p+, V), sua ação de q+ ∩ p0 e o complexo relativo com esses coeficientes."""

    def __init__(self, ax: AbsoluteComplex, ell: int):
        self.ax = ax
        self.ell = ell
        pc = ax.p_complex
        ambient = pc.chain_dim(ell)
        cycles = linalg.kernel(pc.d_star(ell))
        if ambient and not cycles.shape[0]:
            cycles = linalg.zeros((ambient, 0))
        self.reps, self.proj = _homology_projector(cycles, pc.boundaries(ell), ambient)
        mid_gens = ax.generators[:ax.m]
        actions = {z: linalg.mul(self.proj, pc.action(z, ell), self.reps) for z in mid_gens}
        self.chain_map_ok = all(
            linalg.is_zero(linalg.mul(pc.d_star(ell), pc.action(z, ell), self.reps)) for z in mid_gens
        )
        self.coefficients = ExplicitRep(weights=[], actions=actions, label=f"H_{ell}(p+)", dimension=self.reps.shape[1])
        self.relative = LieComplex(ax.cb, mid_gens, self.coefficients, quotient=ax.generators[ax.m:],
                                   name=f"C(q+/p+, H_{ell}(p+))")
        self._proj_columns = linalg.columns(self.proj)
        self._relative_projectors: Dict[int, DomainMatrix] = {}

    def pi(self, k: int) -> DomainMatrix:
        """π: C_k(q+, V) -> C_{k-ℓ}(q+/p+, H_ℓ(p+, V)), lendo a componente de bigrau (k-ℓ, ℓ)."""
        ax, rel, pc = self.ax, self.relative, self.ax.p_complex
        entries = {}
        for col in range(ax.chain_dim(k)):
            subset, v = ax.monomial(k, col)
            mid_part, p_part = ax.split_subset(subset)
            if len(p_part) != self.ell:
                continue
            for h, val in self._proj_columns.get(pc.index(p_part, v), {}).items():
                entries[(rel.index(mid_part, h), col)] = val
        return linalg.sparse(entries, (rel.chain_dim(k - self.ell), ax.chain_dim(k)))

    def relative_projector(self, degree: int) -> Tuple[DomainMatrix, DomainMatrix]:
        if degree not in self._relative_projectors:
            rel = self.relative
            ambient = rel.chain_dim(degree)
            cycles = linalg.kernel(rel.d_star(degree))
            if ambient and not cycles.shape[0]:
                cycles = linalg.zeros((ambient, 0))
            self._relative_projectors[degree] = _homology_projector(cycles, rel.boundaries(degree), ambient)
        return self._relative_projectors[degree]


def pi_projection(ell: int, k: int, ax: AbsoluteComplex, level: Optional[_ProjectionLevel] = None,
                  predicted: Optional[int] = None) -> CheckResult:
    """Projeção Π de ker(∂*_q) ∩ F^ℓ_k na homologia relativa com coeficientes em H_ℓ(p+, V).

    Confere: a componente (k-ℓ, ℓ) está em ker(id⊗∂*_p); π∘∂*_q = ±∂*_ρ∘π
    (sinal registrado); Π anula im(∂*_q) ∩ F^ℓ_k; Π é sobrejetora e seu posto
    coincide com a dimensão prevista pela tabela fatorada.
    """
    level = level or _ProjectionLevel(ax, ell)
    rel = level.relative
    dim = ax.chain_dim(k)
    failures = []
    if not level.chain_map_ok:
        failures.append({"property": "q+ ∩ p0 age por aplicações de cadeia em C(p+, V)"})

    f_idx = ax.filtration_indices(ell, k)
    cycles = linalg.embed(linalg.kernel(linalg.extract(ax.d_star(k), range(ax.chain_dim(k - 1)), f_idx)), f_idx, dim)

    component_idx = [i for i in f_idx if ax.bidegree(k, i)[1] == ell]
    component = linalg.embed(linalg.extract(cycles, component_idx, range(cycles.shape[1])), component_idx, dim)
    witness = next(iter(linalg.columns(linalg.mul(ax.p_lift(k), component))), None)
    if witness is not None:
        failures.append({"property": "componente (k-ℓ, ℓ) em ker(id⊗∂*_p)", "witness_column": witness})

    pi_k = level.pi(k)
    chains = linalg.mul(pi_k, cycles)
    if not linalg.is_zero(linalg.mul(rel.d_star(k - ell), chains)):
        failures.append({"property": "π(ker ∩ F^ℓ) formado por ciclos"})
    reps, proj = level.relative_projector(k - ell)
    big_pi = linalg.mul(proj, chains)
    rank = linalg.rank(big_pi)
    target_dim = reps.shape[1]
    if rank != target_dim:
        failures.append({"property": "sobrejetividade", "rank": rank, "target": target_dim})
    if predicted is not None and target_dim != predicted:
        failures.append({"property": "dimensão prevista", "target": target_dim, "predicted": predicted})

    d_next = ax.d_star(k + 1)
    low_rows = [i for i in range(dim) if ax.bidegree(k, i)[1] < ell]
    preimages = linalg.kernel(linalg.extract(d_next, low_rows, range(d_next.shape[1])))
    if not low_rows:
        preimages = linalg.identity(d_next.shape[1])
    boundaries_f = linalg.mul(d_next, preimages)
    if not linalg.is_zero(linalg.mul(proj, pi_k, boundaries_f)):
        failures.append({"property": "Π anula im(∂*_q) ∩ F^ℓ"})

    rows_below = [i for i in range(ax.chain_dim(k - 1)) if ax.bidegree(k - 1, i) == (k - ell, ell - 1)]
    tilde = linalg.embed(linalg.kernel(linalg.extract(ax.d_star(k), rows_below, f_idx)), f_idx, dim)
    if not rows_below:
        tilde = linalg.embed(linalg.identity(len(f_idx)), f_idx, dim)
    lhs = linalg.mul(level.pi(k - 1), ax.d_star(k), tilde)
    rhs = linalg.mul(rel.d_star(k - ell), pi_k, tilde)
    if linalg.is_zero(lhs) and linalg.is_zero(rhs):
        sign = 0
    elif linalg.equal(lhs, rhs):
        sign = 1
    elif linalg.equal(lhs, linalg.scale(rhs, -1)):
        sign = -1
    else:
        sign = None
        failures.append({"property": "π∘∂*_q = ±∂*_ρ∘π"})
    return _result(f"projection[k={k},l={ell}]", failures, k=k, ell=ell, rank=rank,
                   target=target_dim, predicted=predicted, sign=sign)


def verify_absolute(weight, pair: ParabolicPair, cb: ChevalleyBasis, ax: Optional[AbsoluteComplex] = None) -> VerificationReport:
    """Complexo absoluto, filtração e projeções Π para todo (k, ℓ)."""
    ax = ax or AbsoluteComplex(weight, pair, cb)
    report = VerificationReport(instance=_instance(cb, pair, ax.weight, "absolute"))
    report.add(representation_check(ax.rep, cb))
    report.add(casimir_check(ax.rep, cb, (), ax.weight))
    report.add(complex_check(ax))
    report.add(absolute_relations_check(ax))
    report.add(absolute_homology_check(ax))
    report.add(filtration_check(ax))

    table = factorized_homology(ax.weight, pair, ax.rs)
    predicted = {
        key: sum(weyl_dimension(e.nu, pair.sigma_q, ax.rs) for e in items)
        for key, items in table.entries.items()
    }
    homology = ax.homology_dims()
    ranks: Dict[int, int] = defaultdict(int)
    signs: Dict[str, Optional[int]] = {}
    for ell in range(ax.r + 1):
        level = _ProjectionLevel(ax, ell)
        for k in range(ell, min(ax.n, ell + ax.m) + 1):
            check = report.add(pi_projection(ell, k, ax, level, predicted.get((k - ell, ell), 0)))
            ranks[k] += check.details["rank"]
            signs[f"{k - ell},{ell}"] = check.details["sign"]
    failures = [
        {"k": k, "ranks": ranks[k], "homology": homology[k]}
        for k in ax.degrees if ranks[k] != homology[k]
    ]
    report.add(_result("projection-ranks", failures, ranks=[ranks[k] for k in ax.degrees]))
    # um sinal por bidegree (k-ℓ, ℓ); 0 quando os dois lados se anulam
    failures = [{"bidegree": key} for key, sign in signs.items() if sign is None]
    report.add(_result("projection-sign", failures, signs=signs))
    logger.info(f"Verificação absoluta {ax.name}: {'ok' if report.ok else 'FALHOU'}")
    return report


def verify(weight, pair: ParabolicPair, cb: ChevalleyBasis) -> List[VerificationReport]:
    """Relatório relativo e, quando lambda é g-dominante, também o absoluto."""
    reports = [verify_relative(weight, pair, cb)]
    if is_dominant(weight, ()):
        reports.append(verify_absolute(weight, pair, cb))
    else:
        logger.info("lambda não é g-dominante: verificação absoluta omitida")
    return reports
