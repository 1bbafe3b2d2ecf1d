# core/uea.py

"""
Universal enveloping algebra U(g) in PBW normal form.

Elements are LinearCombinations keyed by exponent tuples (a_1, ..., a_n)
standing for e_1^a_1 ... e_n^a_n in the fixed basis order. Products are
normal-ordered by straightening

    ... e_j e_i ...  ->  ... e_i e_j ...  +  ... [e_j, e_i] ...      (j > i)

which lowers (degree, inversions) lexicographically, so it terminates.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from core.exactlin import LinearCombination, accumulate
from core.liealg import LieAlgebra

PbwMonomial = Tuple[int, ...]
Word = Tuple[int, ...]


class UeaElement(LinearCombination):
    """Sparse element of U(g): PbwMonomial -> Fraction."""

    def degree(self) -> int:
        return max((sum(m) for m in self), default=-1)


class TensorElement(LinearCombination):
    """Sparse element of U(g) (x) U(g): (PbwMonomial, PbwMonomial) -> Fraction."""

    def flip(self) -> "TensorElement":
        return TensorElement({(b, a): c for (a, b), c in self.items()})


# =========================
# Monomial helpers
# =========================

def monomial_degree(m: PbwMonomial) -> int:
    return sum(m)


def monomial_to_word(m: PbwMonomial) -> Word:
    return tuple(i for i, a in enumerate(m) for _ in range(a))


def word_to_monomial(word: Word, n: int) -> PbwMonomial:
    exps = [0] * n
    for i in word:
        exps[i] += 1
    return tuple(exps)


def monomials_of_degree(n: int, d: int) -> Iterator[PbwMonomial]:
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def monomials_up_to(n: int, max_degree: int) -> List[PbwMonomial]:
    """All exponent vectors of total degree <= max_degree, by degree."""
    out: List[PbwMonomial] = []
    for d in range(max_degree + 1):
        out.extend(monomials_of_degree(n, d))
    return out


def format_monomial(m: PbwMonomial, names) -> str:
    parts = []
    for a, name in zip(m, names):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


# =========================
# Enveloping algebra
# =========================

class EnvelopingAlgebra:
    """
    U(L) with the straightening memo. The memo maps a word to its normal
    form; concurrent writers store identical values, so races are benign.
    """

    def __init__(self, lie: LieAlgebra):
        self.lie = lie
        self.n = lie.dim
        self._normal: Dict[Word, Dict[PbwMonomial, Fraction]] = {}
        # [e_j, e_i] for j > i, looked up on every rewrite step
        self._swap = {
            (j, i): lie.bracket_basis(j, i)
            for i in range(self.n) for j in range(i + 1, self.n)
        }

    # ---------------------
    # Constructors
    # ---------------------

    def one(self) -> UeaElement:
        return UeaElement({(0,) * self.n: 1})

    def zero(self) -> UeaElement:
        return UeaElement()

    def generator(self, i: int) -> UeaElement:
        exps = [0] * self.n
        exps[i] = 1
        return UeaElement({tuple(exps): 1})

    def monomial(self, m: PbwMonomial, coeff=1) -> UeaElement:
        return UeaElement({tuple(m): coeff})

    def word_element(self, word: Word) -> UeaElement:
        """Normal form of the (possibly unordered) product of generators."""
        return UeaElement(self.normal_form(tuple(word)))

    def basis(self, max_degree: int) -> List[PbwMonomial]:
        return monomials_up_to(self.n, max_degree)

    # ---------------------
    # Straightening
    # ---------------------

    def normal_form(self, word: Word) -> Dict[PbwMonomial, Fraction]:
        cached = self._normal.get(word)
        if cached is not None:
            return cached

        descent = next((p for p in range(len(word) - 1) if word[p] > word[p + 1]), None)
        if descent is None:
            result = {word_to_monomial(word, self.n): Fraction(1)}
        else:
            j, i = word[descent], word[descent + 1]
            head, tail = word[:descent], word[descent + 2:]

            acc: Dict[PbwMonomial, Fraction] = {}
            pieces = [(head + (i, j) + tail, Fraction(1))]
            pieces += [(head + (k,) + tail, c) for k, c in self._swap[(j, i)].items()]
            for sub_word, coeff in pieces:
                for m, c in self.normal_form(sub_word).items():
                    value = acc.get(m, Fraction(0)) + coeff * c
                    if value:
                        acc[m] = value
                    else:
                        acc.pop(m, None)
            result = acc

        self._normal[word] = result
        return result

    def multiply_monomials(self, m1: PbwMonomial, m2: PbwMonomial) -> Dict[PbwMonomial, Fraction]:
        return self.normal_form(monomial_to_word(m1) + monomial_to_word(m2))

    def multiply(self, x: UeaElement, y: UeaElement) -> UeaElement:
        pairs = []
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                for m, c in self.multiply_monomials(m1, m2).items():
                    pairs.append((m, c1 * c2 * c))
        return accumulate(pairs, UeaElement)

    def power(self, x: UeaElement, k: int) -> UeaElement:
        out = self.one()
        for _ in range(k):
            out = self.multiply(out, x)
        return out

    def commutator(self, x: UeaElement, y: UeaElement) -> UeaElement:
        return self.multiply(x, y) - self.multiply(y, x)

    # ---------------------
    # Hopf structure
    # ---------------------

    def tensor_multiply(self, u: TensorElement, v: TensorElement) -> TensorElement:
        pairs = []
        for (a1, b1), c1 in u.items():
            for (a2, b2), c2 in v.items():
                left = self.multiply_monomials(a1, a2)
                right = self.multiply_monomials(b1, b2)
                for ml, cl in left.items():
                    for mr, cr in right.items():
                        pairs.append(((ml, mr), c1 * c2 * cl * cr))
        return accumulate(pairs, TensorElement)

    def coproduct_monomial(self, m: PbwMonomial) -> TensorElement:
        """Delta is the algebra map with Delta(X) = X(x)1 + 1(x)X on generators."""
        unit = (0,) * self.n
        out = TensorElement({(unit, unit): 1})
        for i in monomial_to_word(m):
            gen = self.generator(i)
            (g,) = gen.keys()
            out = self.tensor_multiply(out, TensorElement({(g, unit): 1, (unit, g): 1}))
        return out

    def coproduct(self, x: UeaElement) -> TensorElement:
        total = TensorElement()
        for m, c in x.items():
            total = total + self.coproduct_monomial(m).scale(c)
        return total

    def counit(self, x: UeaElement) -> Fraction:
        return x.coefficient((0,) * self.n)

    def antipode(self, x: UeaElement) -> UeaElement:
        """Anti-automorphism with S(X) = -X: the reversed word with sign (-1)^deg."""
        pairs = []
        for m, c in x.items():
            word = monomial_to_word(m)
            sign = -1 if len(word) % 2 else 1
            for nm, nc in self.normal_form(tuple(reversed(word))).items():
                pairs.append((nm, sign * c * nc))
        return accumulate(pairs, UeaElement)


@lru_cache(maxsize=64)
def enveloping_algebra(lie: LieAlgebra) -> EnvelopingAlgebra:
    return EnvelopingAlgebra(lie)


# =========================
# Operations
# =========================

def pbw_multiply(x: UeaElement, y: UeaElement, lie: LieAlgebra) -> UeaElement:
    return enveloping_algebra(lie).multiply(x, y)


def coproduct(x: UeaElement, lie: LieAlgebra) -> TensorElement:
    return enveloping_algebra(lie).coproduct(x)


def counit_antipode(x: UeaElement, lie: LieAlgebra) -> Tuple[Fraction, UeaElement]:
    U = enveloping_algebra(lie)
    return U.counit(x), U.antipode(x)


def truncate(x: UeaElement, max_degree: int) -> UeaElement:
    return UeaElement({m: c for m, c in x.items() if sum(m) <= max_degree})


# =========================
# Hopf axiom checks
# =========================

def apply_left_counit(t: TensorElement, n: int) -> UeaElement:
    """(eps (x) 1) t"""
    unit = (0,) * n
    return UeaElement({b: c for (a, b), c in t.items() if a == unit})


def apply_right_counit(t: TensorElement, n: int) -> UeaElement:
    """(1 (x) eps) t"""
    unit = (0,) * n
    return UeaElement({a: c for (a, b), c in t.items() if b == unit})


def left_coassociator(U: EnvelopingAlgebra, x: UeaElement) -> LinearCombination:
    """(Delta (x) 1) Delta x as a map (a, b, c) -> coefficient"""
    pairs = []
    for (a, b), c in U.coproduct(x).items():
        for (a1, a2), c1 in U.coproduct_monomial(a).items():
            pairs.append(((a1, a2, b), c * c1))
    return accumulate(pairs)


def right_coassociator(U: EnvelopingAlgebra, x: UeaElement) -> LinearCombination:
    """(1 (x) Delta) Delta x"""
    pairs = []
    for (a, b), c in U.coproduct(x).items():
        for (b1, b2), c1 in U.coproduct_monomial(b).items():
            pairs.append(((a, b1, b2), c * c1))
    return accumulate(pairs)


def antipode_convolutions(U: EnvelopingAlgebra, x: UeaElement) -> Tuple[UeaElement, UeaElement]:
    """mu (S (x) 1) Delta x  and  mu (1 (x) S) Delta x"""
    left = UeaElement()
    right = UeaElement()
    for (a, b), c in U.coproduct(x).items():
        a_el, b_el = U.monomial(a), U.monomial(b)
        left = left + U.multiply(U.antipode(a_el), b_el).scale(c)
        right = right + U.multiply(a_el, U.antipode(b_el)).scale(c)
    return left, right


def random_element(U: EnvelopingAlgebra, rng, max_degree: int, max_terms: int = 2) -> UeaElement:
    basis = U.basis(max_degree)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(basis)] = Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 2))
    return UeaElement(terms)

