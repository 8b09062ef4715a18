"""Noncommutative polynomials on indexed generators, with deglex rewriting
and bounded overlap completion.

Generators are pairs ``(s, i)`` (1-based) printed ``x[s,i]``.  The monomial
order is degree-first, then left-to-right lexicographic on the generator
precedence ``(s, i) < (s', i')  iff  i < i' or (i = i' and s < s')``, so the
first-column generators ``x[a,1]`` are the smallest and get eliminated by
substitution.  Rewrite rules are stored monic with the leading word on the
left; a rewrite system also carries the substitutions for eliminated
generators, so together they generate the full defining ideal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import CompletionBoundError, PresentationContradiction
from .fields import Scalar

GenId = tuple[int, int]  # (s, i), 1-based: the generator x[s,i]
Word = tuple[GenId, ...]  # () is the multiplicative unit


def gen_key(g: GenId) -> tuple[int, int]:
    s, i = g
    return (i, s)


def word_key(w: Word):
    return (len(w), tuple(gen_key(g) for g in w))


def format_genid(g: GenId) -> str:
    return f"x[{g[0]},{g[1]}]"


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(format_genid(g) for g in w)


def _find(word: Word, factor: Word, leftmost: bool = True) -> int | None:
    """Position of an occurrence of factor inside word, or None."""
    span = len(word) - len(factor)
    if span < 0:
        return None
    positions = range(span + 1) if leftmost else range(span, -1, -1)
    for p in positions:
        if word[p : p + len(factor)] == factor:
            return p
    return None


class NCPoly:
    """Finite scalar combination of words; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        self.terms: dict[Word, Scalar] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    @classmethod
    def term(cls, word: Word, coeff: Scalar) -> "NCPoly":
        return cls({word: coeff})

    @classmethod
    def constant(cls, coeff: Scalar) -> "NCPoly":
        return cls({(): coeff})

    @classmethod
    def gen(cls, g: GenId, one: Scalar) -> "NCPoly":
        return cls({(g,): one})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def generators(self) -> set[GenId]:
        return {g for w in self.terms for g in w}

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=word_key)

    def leading_coeff(self) -> Scalar:
        return self.terms[self.leading_word()]

    def monic(self) -> "NCPoly":
        c = self.leading_coeff()
        return NCPoly({w: v / c for w, v in self.terms.items()})

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v:
                    out[w] = v
                else:
                    del out[w]
        return NCPoly(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        out: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                v = out.get(w)
                if v is None:
                    out[w] = c
                else:
                    v = v + c
                    if v:
                        out[w] = v
                    else:
                        del out[w]
        return NCPoly(out)

    def scale(self, c: Scalar) -> "NCPoly":
        if not c:
            return NCPoly()
        return NCPoly({w: c * v for w, v in self.terms.items()})

    def shift(self, left: Word, right: Word) -> "NCPoly":
        """Multiply by bare words on both sides (no scalars involved)."""
        return NCPoly({left + w + right: c for w, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and other.terms == self.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return format_poly(self)


def format_poly(p: NCPoly) -> str:
    if p.is_zero():
        return "0"
    return " + ".join(f"{c} * {format_word(w)}" for w, c in p.sorted_terms())


def substitute(p: NCPoly, subs: Mapping[GenId, NCPoly]) -> NCPoly:
    """Replace eliminated generators by their substitution polynomials."""
    if not subs or not any(g in subs for g in p.generators()):
        return p
    out = NCPoly()
    for word, c in p.terms.items():
        acc = NCPoly({(): c})
        for g in word:
            rep = subs.get(g)
            if rep is None:
                acc = acc.shift((), (g,))
            else:
                acc = acc * rep
        out = out + acc
    return out


@dataclass(frozen=True)
class RewriteRule:
    lead: Word
    rest: NCPoly  # rewrite lead -> rest; every word of rest is < lead
    poly: NCPoly  # the monic relation lead - rest

    def __repr__(self) -> str:
        return f"{format_word(self.lead)} -> {format_poly(self.rest)}"


def _make_rule(p: NCPoly) -> RewriteRule:
    lead = p.leading_word()
    rest = NCPoly({w: -c for w, c in p.terms.items() if w != lead})
    return RewriteRule(lead, rest, p)


def _reduce(p: NCPoly, rules: list[RewriteRule], strategy: str = "standard") -> NCPoly:
    """Full normal form of p modulo the rule list.

    standard: largest reducible word, lowest rule index, leftmost position.
    reverse:  smallest reducible word, highest rule index, rightmost position.
    """
    if strategy not in ("standard", "reverse"):
        raise ValueError(f"unknown strategy {strategy!r}")
    forward = strategy == "standard"
    while True:
        site = None
        words = sorted(p.terms, key=word_key, reverse=forward)
        rule_order = rules if forward else list(reversed(rules))
        for w in words:
            for rule in rule_order:
                pos = _find(w, rule.lead, leftmost=forward)
                if pos is not None:
                    site = (w, rule, pos)
                    break
            if site:
                break
        if site is None:
            return p
        w, rule, pos = site
        c = p.terms[w]
        repl = rule.rest.shift(w[:pos], w[pos + len(rule.lead) :]).scale(c)
        p = (p - NCPoly({w: c})) + repl


class RewriteSystem:
    """Substitutions for eliminated generators plus interreduced rewrite rules.

    ``degree_bound`` is the degree up to which overlap completion has
    certified confluence (0 before :func:`complete` has run).
    """

    __slots__ = ("subs", "rules", "degree_bound")

    def __init__(
        self,
        subs: Mapping[GenId, NCPoly] | None = None,
        rules: Iterable[RewriteRule] = (),
        degree_bound: int = 0,
    ):
        ordered = sorted((subs or {}).items(), key=lambda kv: gen_key(kv[0]))
        self.subs: dict[GenId, NCPoly] = dict(ordered)
        self.rules: tuple[RewriteRule, ...] = tuple(
            sorted(rules, key=lambda r: word_key(r.lead))
        )
        self.degree_bound = degree_bound

    def eliminated(self) -> tuple[GenId, ...]:
        return tuple(self.subs)

    def max_rule_degree(self) -> int:
        return max((len(r.lead) for r in self.rules), default=0)

    def normal_form(self, p: NCPoly, strategy: str = "standard") -> NCPoly:
        return _reduce(substitute(p, self.subs), list(self.rules), strategy)

    def rule_polys(self) -> list[NCPoly]:
        return [r.poly for r in self.rules]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RewriteSystem)
            and other.subs == self.subs
            and other.rules == self.rules
        )

    def __repr__(self) -> str:
        subs = "; ".join(f"{format_genid(g)} -> {format_poly(q)}" for g, q in self.subs.items())
        rules = "; ".join(repr(r) for r in self.rules)
        return f"RewriteSystem(subs=[{subs}], rules=[{rules}], D={self.degree_bound})"


def _interreduce_core(
    inputs: Iterable[NCPoly], subs0: Mapping[GenId, NCPoly]
) -> tuple[dict[GenId, NCPoly], list[RewriteRule]]:
    subs: dict[GenId, NCPoly] = dict(subs0)
    work: deque[NCPoly] = deque(inputs)
    rules: list[RewriteRule] = []
    while work:
        p = work.popleft()
        p = substitute(p, subs)
        p = _reduce(p, rules)
        if p.is_zero():
            continue
        lead = p.leading_word()
        if len(lead) == 0:
            raise PresentationContradiction(
                f"relations force the scalar equation {format_poly(p)} = 0"
            )
        p = p.monic()
        if len(lead) == 1:
            g = lead[0]
            rep = NCPoly({w: -c for w, c in p.terms.items() if w != lead})
            single = {g: rep}
            subs = {h: substitute(q, single) for h, q in subs.items()}
            subs[g] = rep
            # the eliminated generator may occur in any existing rule
            for r in reversed(rules):
                work.appendleft(r.poly)
            rules = []
        else:
            keep = []
            for r in rules:
                if any(_find(w, lead) is not None for w in r.poly.terms):
                    work.append(r.poly)
                else:
                    keep.append(r)
            keep.append(_make_rule(p))
            rules = keep
    rules.sort(key=lambda r: word_key(r.lead))
    return subs, rules


def interreduce(relations: Iterable[NCPoly]) -> RewriteSystem:
    """Orient and mutually reduce relations.

    Relations whose leading term is a single generator eliminate that
    generator by substitution everywhere; the remaining rules are pairwise
    irreducible.  The two-sided ideal generated by substitutions and rules
    together equals the ideal of the input relations.

    Raises PresentationContradiction if some relation reduces to a nonzero
    scalar.
    """
    subs, rules = _interreduce_core(list(relations), {})
    return RewriteSystem(subs, rules, 0)


def _overlap_candidates(rules: list[RewriteRule], degree_bound: int):
    """All proper overlaps u = ...w, v = w... of rule leading words, as
    tuples (sort key, u, v, k, rule_u, rule_v) with overlap length k."""
    out = []
    for ri in rules:
        for rj in rules:
            u, v = ri.lead, rj.lead
            for k in range(1, min(len(u), len(v))):
                if u[len(u) - k :] == v[:k]:
                    w = u + v[k:]
                    if len(w) <= degree_bound:
                        out.append((word_key(w), u, v, k, ri, rj))
    out.sort(key=lambda t: (t[0], t[1], t[2], t[3]))
    return out


_COMPLETION_ROUND_CAP = 1000


def complete(system: RewriteSystem, degree_bound: int) -> RewriteSystem:
    """Bounded overlap completion (diamond lemma style).

    Resolves every overlap ambiguity whose overlap word has degree at most
    ``degree_bound``, adding oriented S-polynomials as new rules until a
    fixpoint; the result computes canonical normal forms for all inputs of
    degree <= degree_bound.  Raises CompletionBoundError if no fixpoint is
    reached within the round budget.
    """
    if degree_bound < system.max_rule_degree():
        raise ValueError(
            f"degree bound {degree_bound} is below the maximal rule degree "
            f"{system.max_rule_degree()}"
        )
    subs = dict(system.subs)
    rules = list(system.rules)
    checked: set[tuple[Word, Word, int]] = set()
    rounds = 0
    while True:
        rounds += 1
        if rounds > _COMPLETION_ROUND_CAP:
            raise CompletionBoundError(
                f"no completion fixpoint within {_COMPLETION_ROUND_CAP} rounds "
                f"at degree bound {degree_bound}"
            )
        new_poly = None
        for _, u, v, k, ri, rj in _overlap_candidates(rules, degree_bound):
            if (u, v, k) in checked:
                continue
            checked.add((u, v, k))
            # the overlap word u + v[k:] rewritten via ri at position 0,
            # and via rj at position len(u) - k
            left = ri.rest.shift((), v[k:])
            right = rj.rest.shift(u[: len(u) - k], ())
            diff = _reduce(left, rules) - _reduce(right, rules)
            if not diff.is_zero():
                new_poly = diff
                break
        if new_poly is None:
            return RewriteSystem(subs, rules, degree_bound)
        subs, rules = _interreduce_core(
            [r.poly for r in rules] + [new_poly], subs
        )


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    witness: NCPoly  # the normal form; zero iff member

    def __bool__(self) -> bool:
        return self.member


def ideal_member_bounded(p: NCPoly, system: RewriteSystem, degree_bound: int) -> MembershipResult:
    """Decide p in ideal(system) for degrees within the certified bound."""
    need = max(degree_bound, p.degree())
    if system.degree_bound < need:
        raise ValueError(
            f"system certified to degree {system.degree_bound}, need {need}"
        )
    nf = system.normal_form(p)
    return MembershipResult(nf.is_zero(), nf)


class TensorPoly:
    """Element of (free algebra) tensor (free algebra): word pairs to scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[Word, Word], Scalar] | None = None):
        self.terms: dict[tuple[Word, Word], Scalar] = {
            k: c for k, c in (terms or {}).items() if c
        }

    @classmethod
    def zero(cls) -> "TensorPoly":
        return cls()

    @classmethod
    def term(cls, left: Word, right: Word, coeff: Scalar) -> "TensorPoly":
        return cls({(left, right): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return TensorPoly(out)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        if not isinstance(other, TensorPoly):
            return NotImplemented
        out: dict[tuple[Word, Word], Scalar] = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                k = (l1 + l2, r1 + r2)
                c = c1 * c2
                v = out.get(k)
                if v is None:
                    out[k] = c
                else:
                    v = v + c
                    if v:
                        out[k] = v
                    else:
                        del out[k]
        return TensorPoly(out)

    def scale(self, c: Scalar) -> "TensorPoly":
        if not c:
            return TensorPoly()
        return TensorPoly({k: c * v for k, v in self.terms.items()})

    def sorted_terms(self) -> list[tuple[tuple[Word, Word], Scalar]]:
        return sorted(
            self.terms.items(),
            key=lambda t: (word_key(t[0][0]), word_key(t[0][1])),
            reverse=True,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorPoly) and other.terms == self.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return format_tensor(self)


def format_tensor(t: TensorPoly) -> str:
    if t.is_zero():
        return "0"
    return " + ".join(
        f"{c} * {format_word(l)} (x) {format_word(r)}" for (l, r), c in t.sorted_terms()
    )


def tensor_normal_form(t: TensorPoly, system: RewriteSystem, strategy: str = "standard") -> TensorPoly:
    """Reduce both tensor legs independently and re-aggregate."""
    out = TensorPoly()
    for (wl, wr), c in t.terms.items():
        pl = system.normal_form(NCPoly({wl: c}), strategy)
        if pl.is_zero():
            continue
        one = c / c  # stored coefficients are nonzero, so this is 1 of the field
        pr = system.normal_form(NCPoly({wr: one}), strategy)
        acc: dict[tuple[Word, Word], Scalar] = {}
        for w1, c1 in pl.terms.items():
            for w2, c2 in pr.terms.items():
                acc[(w1, w2)] = c1 * c2
        out = out + TensorPoly(acc)
    return out


def iter_words(gens: list[GenId], max_degree: int) -> Iterator[Word]:
    """All words over gens of degree <= max_degree, in deglex order."""
    level: list[Word] = [()]
    yield ()
    ordered = sorted(gens, key=gen_key)
    for _ in range(max_degree):
        level = [w + (g,) for w in level for g in ordered]
        level.sort(key=word_key)
        yield from level
