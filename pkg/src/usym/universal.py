"""Presentations of the universal coacting bialgebra a(A) (and its two-algebra
variant a(A,B)) from structure constants, plus machine verification of the
bialgebra and comodule axioms at bounded degree.

For an n-dimensional algebra A the defining relations on generators x[s,i] are

    sum_u tau[i,j,u] x[a,u]  =  sum_{s,t} tau[s,t,a] x[s,i] x[t,j]
    x[a,1] = delta(a,1)

for all a, i, j.  Interreduction eliminates the generators forced to scalars
(at least the whole first column) and bounded completion makes normal forms
canonical up to the requested degree.  The comultiplication, counit and the
canonical coaction are tabulated on the surviving generators:

    Delta(x[i,j]) = sum_s x[i,s] (x) x[s,j],   eps(x[i,j]) = delta(i,j),
    eta(e_i) = sum_s e_s (x) x[s,i].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import FinAlgebra
from .fields import Scalar
from .report import CheckItem, CheckReport
from .ncpoly import (
    GenId,
    NCPoly,
    RewriteSystem,
    TensorPoly,
    Word,
    complete,
    format_genid,
    gen_key,
    ideal_member_bounded,
    interreduce,
    tensor_normal_form,
)

DEFAULT_DEGREE_BOUND = 4


def build_measuring_relations(a: FinAlgebra, b: FinAlgebra) -> list[NCPoly]:
    """Raw defining relations of a(A,B): dim(A)*dim(B)^2 product relations in
    lexicographic (a, i, j) emission order, then dim(A) unit relations."""
    if a.field != b.field:
        raise ValueError("both algebras must share one field")
    n, m = a.n, b.n
    one = a.field.one
    rels: list[NCPoly] = []
    for ai in range(1, n + 1):
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                terms: dict[Word, Scalar] = {}
                for u, c in b.basis_product(i - 1, j - 1).items():
                    w: Word = ((ai, u + 1),)
                    terms[w] = terms.get(w, a.field.zero) + c
                for (s, t, c) in a.pairs_with_result(ai - 1):
                    w = ((s + 1, i), (t + 1, j))
                    terms[w] = terms.get(w, a.field.zero) - c
                rels.append(NCPoly(terms))
    for ai in range(1, n + 1):
        terms = {((ai, 1),): one}
        if ai == 1:
            terms[()] = -one
        rels.append(NCPoly(terms))
    return rels


def build_relations(a: FinAlgebra) -> list[NCPoly]:
    """Raw defining relations of a(A): n^3 product relations plus n unit ones."""
    return build_measuring_relations(a, a)


def _all_gens(n: int, m: int) -> list[GenId]:
    return sorted(((s, i) for s in range(1, n + 1) for i in range(1, m + 1)), key=gen_key)


def _subst_gen(system: RewriteSystem, g: GenId, one: Scalar) -> NCPoly:
    """Image of a generator after eliminating the substituted ones."""
    rep = system.subs.get(g)
    if rep is not None:
        return rep
    return NCPoly.gen(g, one)


def tensor_of(left: NCPoly, right: NCPoly) -> TensorPoly:
    out: dict[tuple[Word, Word], Scalar] = {}
    for wl, cl in left.terms.items():
        for wr, cr in right.terms.items():
            k = (wl, wr)
            c = cl * cr
            v = out.get(k)
            out[k] = c if v is None else v + c
    return TensorPoly(out)


@dataclass(eq=True)
class Presentation:
    """The computable face of a(A): surviving generators, substitutions and
    rules, Delta/eps tables, and the canonical coaction table."""

    algebra: FinAlgebra
    degree_bound: int
    gens: tuple[GenId, ...]
    system: RewriteSystem
    delta: dict[GenId, TensorPoly] = field(default_factory=dict)
    eps: dict[GenId, Scalar] = field(default_factory=dict)
    # coaction[i] lists (s, poly) with eta(e_{i+1}) = sum_s e_{s+1} (x) poly
    coaction: tuple[tuple[tuple[int, NCPoly], ...], ...] = ()

    def eliminated(self) -> tuple[GenId, ...]:
        return self.system.eliminated()


@dataclass(eq=True)
class MeasuringPresentation:
    """Presentation of a(A,B); no coalgebra structure is attached."""

    algebra_a: FinAlgebra
    algebra_b: FinAlgebra
    degree_bound: int
    gens: tuple[GenId, ...]
    system: RewriteSystem

    def eliminated(self) -> tuple[GenId, ...]:
        return self.system.eliminated()


def build_measuring(a: FinAlgebra, b: FinAlgebra, degree_bound: int = DEFAULT_DEGREE_BOUND) -> MeasuringPresentation:
    if degree_bound < 2:
        raise ValueError("degree bound must be at least 2")
    system = complete(interreduce(build_measuring_relations(a, b)), degree_bound)
    gens = tuple(g for g in _all_gens(a.n, b.n) if g not in system.subs)
    return MeasuringPresentation(a, b, degree_bound, gens, system)


def build_presentation(a: FinAlgebra, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    if degree_bound < 2:
        raise ValueError("degree bound must be at least 2")
    n = a.n
    one = a.field.one
    system = complete(interreduce(build_relations(a)), degree_bound)
    gens = tuple(g for g in _all_gens(n, n) if g not in system.subs)

    delta: dict[GenId, TensorPoly] = {}
    eps: dict[GenId, Scalar] = {}
    for g in gens:
        gi, gj = g
        t = TensorPoly()
        for s in range(1, n + 1):
            t = t + tensor_of(
                _subst_gen(system, (gi, s), one), _subst_gen(system, (s, gj), one)
            )
        delta[g] = t
        eps[g] = one if gi == gj else a.field.zero

    coaction = []
    for i in range(1, n + 1):
        entries = []
        for s in range(1, n + 1):
            poly = _subst_gen(system, (s, i), one)
            if not poly.is_zero():
                entries.append((s - 1, poly))
        coaction.append(tuple(entries))
    return Presentation(a, degree_bound, gens, system, delta, eps, tuple(coaction))


class _CoalgebraOps:
    """Delta/eps extended multiplicatively to the whole free algebra, with the
    substitution map applied to every generator image."""

    def __init__(self, algebra: FinAlgebra, system: RewriteSystem):
        self.n = algebra.n
        self.field = algebra.field
        self.system = system
        self._delta_gen: dict[GenId, TensorPoly] = {}

    def delta_of_gen(self, g: GenId) -> TensorPoly:
        cached = self._delta_gen.get(g)
        if cached is not None:
            return cached
        gi, gj = g
        one = self.field.one
        t = TensorPoly()
        for s in range(1, self.n + 1):
            t = t + tensor_of(
                _subst_gen(self.system, (gi, s), one),
                _subst_gen(self.system, (s, gj), one),
            )
        self._delta_gen[g] = t
        return t

    def delta_of_word(self, w: Word) -> TensorPoly:
        out = TensorPoly.term((), (), self.field.one)
        for g in w:
            out = out * self.delta_of_gen(g)
        return out

    def delta_of_poly(self, p: NCPoly) -> TensorPoly:
        out = TensorPoly()
        for w, c in p.terms.items():
            out = out + self.delta_of_word(w).scale(c)
        return out

    def eps_of_word(self, w: Word) -> Scalar:
        out = self.field.one
        for (s, i) in w:
            if s != i:
                return self.field.zero
        return out

    def eps_of_poly(self, p: NCPoly) -> Scalar:
        out = self.field.zero
        for w, c in p.terms.items():
            e = self.eps_of_word(w)
            if e:
                out = out + c * e
        return out


def _nf3(terms: dict[tuple[Word, Word, Word], Scalar], system: RewriteSystem) -> dict:
    """Legwise normal form of a three-leg tensor, aggregated."""
    out: dict[tuple[Word, Word, Word], Scalar] = {}
    for (w1, w2, w3), c in terms.items():
        p1 = system.normal_form(NCPoly({w1: c}))
        if p1.is_zero():
            continue
        one = c / c
        p2 = system.normal_form(NCPoly({w2: one}))
        p3 = system.normal_form(NCPoly({w3: one}))
        for u1, c1 in p1.terms.items():
            for u2, c2 in p2.terms.items():
                for u3, c3 in p3.terms.items():
                    k = (u1, u2, u3)
                    v = out.get(k)
                    c123 = c1 * c2 * c3
                    if v is None:
                        out[k] = c123
                    else:
                        v = v + c123
                        if v:
                            out[k] = v
                        else:
                            del out[k]
    return out


def _relation_labels(a: FinAlgebra) -> list[str]:
    n = a.n
    labels = [
        f"r[{ai},{i},{j}]"
        for ai in range(1, n + 1)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    ]
    labels += [f"r[unit,{ai}]" for ai in range(1, n + 1)]
    return labels


def check_bialgebra(p: Presentation, degree_bound: int | None = None) -> CheckReport:
    """Verify that Delta and eps are well defined on the quotient and satisfy
    the coalgebra axioms on the surviving generators."""
    d = degree_bound if degree_bound is not None else p.degree_bound
    if p.degree_bound < d:
        raise ValueError(f"presentation certified to degree {p.degree_bound}, need {d}")
    a = p.algebra
    ops = _CoalgebraOps(a, p.system)
    items: list[CheckItem] = []

    relations = build_relations(a)
    for label, rel in zip(_relation_labels(a), relations):
        dh = tensor_normal_form(ops.delta_of_poly(rel), p.system)
        items.append(
            CheckItem(
                f"delta-descends {label}",
                dh.is_zero(),
                "" if dh.is_zero() else f"residue {dh!r}",
            )
        )
        eh = ops.eps_of_poly(rel)
        items.append(
            CheckItem(
                f"eps-descends {label}",
                not eh,
                "" if not eh else f"residue {eh}",
            )
        )

    for g in p.gens:
        dg = p.delta[g]
        left: dict[tuple[Word, Word, Word], Scalar] = {}
        right: dict[tuple[Word, Word, Word], Scalar] = {}
        for (w1, w2), c in dg.terms.items():
            for (u1, u2), cc in ops.delta_of_word(w1).scale(c).terms.items():
                k = (u1, u2, w2)
                left[k] = left.get(k, a.field.zero) + cc
            for (u1, u2), cc in ops.delta_of_word(w2).scale(c).terms.items():
                k = (w1, u1, u2)
                right[k] = right.get(k, a.field.zero) + cc
        coassoc_ok = _nf3(left, p.system) == _nf3(right, p.system)
        items.append(CheckItem(f"coassoc {format_genid(g)}", coassoc_ok))

        gen_nf = p.system.normal_form(NCPoly.gen(g, a.field.one))
        lcounit = NCPoly()
        rcounit = NCPoly()
        for (w1, w2), c in dg.terms.items():
            e1 = ops.eps_of_word(w1)
            if e1:
                lcounit = lcounit + NCPoly({w2: c * e1})
            e2 = ops.eps_of_word(w2)
            if e2:
                rcounit = rcounit + NCPoly({w1: c * e2})
        counit_ok = (
            p.system.normal_form(lcounit) == gen_nf
            and p.system.normal_form(rcounit) == gen_nf
        )
        items.append(CheckItem(f"counit {format_genid(g)}", counit_ok))

    return CheckReport(items)


def check_comodule(p: Presentation, degree_bound: int | None = None) -> CheckReport:
    """Verify that the canonical coaction is a coassociative, counital
    algebra map modulo the relation ideal at the certified degree."""
    d = degree_bound if degree_bound is not None else p.degree_bound
    if p.degree_bound < d:
        raise ValueError(f"presentation certified to degree {p.degree_bound}, need {d}")
    a = p.algebra
    n = a.n
    one, zero = a.field.one, a.field.zero
    ops = _CoalgebraOps(a, p.system)
    items: list[CheckItem] = []

    unit_entry = p.coaction[0]
    unit_ok = unit_entry == ((0, NCPoly.constant(one)),)
    items.append(CheckItem("coaction-unit e[1]", unit_ok))

    for i in range(1, n + 1):
        xi = {s: _subst_gen(p.system, (s, i), one) for s in range(1, n + 1)}
        ok = True
        detail = ""
        for t in range(1, n + 1):
            lhs = TensorPoly()
            for s in range(1, n + 1):
                xts = _subst_gen(p.system, (t, s), one)
                lhs = lhs + tensor_of(xts, xi[s])
            rhs = ops.delta_of_poly(_subst_gen(p.system, (t, i), one))
            if not tensor_normal_form(lhs - rhs, p.system).is_zero():
                ok = False
                detail = f"component t={t}"
                break
        items.append(CheckItem(f"coaction-coassoc e[{i}]", ok, detail))

        counit_vec = tuple(ops.eps_of_poly(xi[s]) for s in range(1, n + 1))
        want = tuple(one if s == i else zero for s in range(1, n + 1))
        items.append(CheckItem(f"coaction-counit e[{i}]", counit_vec == want))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ok = True
            detail = ""
            prod = a.basis_product(i - 1, j - 1)
            for ai in range(1, n + 1):
                lhs = NCPoly()
                for u, c in prod.items():
                    lhs = lhs + _subst_gen(p.system, (ai, u + 1), one).scale(c)
                rhs = NCPoly()
                for (s, t, c) in a.pairs_with_result(ai - 1):
                    rhs = rhs + (
                        _subst_gen(p.system, (s + 1, i), one)
                        * _subst_gen(p.system, (t + 1, j), one)
                    ).scale(c)
                if not ideal_member_bounded(lhs - rhs, p.system, d).member:
                    ok = False
                    detail = f"coordinate a={ai}"
                    break
            items.append(CheckItem(f"coaction-mult e[{i}]e[{j}]", ok, detail))

    return CheckReport(items)
