# smash/hopf.py

"""
Cocommutative Hopf algebras H acting in smash products.

Two kinds share one interface (elements are LinearCombinations over keys):
  - enveloping: H = U(h), keys are PBW monomials, generators are primitive
  - group:      H = QG for a finite permutation group G, keys are element
                indices, every basis element is group-like
"""

from collections import deque
from fractions import Fraction
from typing import Dict, Hashable, List, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from core.errors import InputError, InvariantViolation
from core.exactlin import LinearCombination, accumulate
from core.liealg import LieAlgebra
from core.uea import UeaElement, enveloping_algebra, format_monomial, monomial_degree

PRIMITIVE = "primitive"
GROUPLIKE = "grouplike"


# =========================
# Finite groups
# =========================

class FiniteGroup:
    """
    Finite permutation group with a Cayley table on element indices.

    Product convention: mult(a, b) = a o b (apply b, then a), so that a left
    action satisfies (a o b).x = a.(b.x). Element 0 is the identity; the
    order of the remaining elements is breadth-first from the generators.
    """

    def __init__(self, name: str, generators: Sequence[Sequence[int]]):
        if not generators:
            raise InputError("a group needs at least one generator (use [[0]] for the trivial group)", name)
        sizes = {len(g) for g in generators}
        if len(sizes) != 1:
            raise InputError("all generator permutations must act on the same number of points", name)
        size = sizes.pop()

        try:
            self.generator_perms = [Permutation(list(g)) for g in generators]
        except ValueError as exc:
            raise InputError(f"bad permutation: {exc}", name) from None

        self.name = name
        self.degree = size
        identity = Permutation(list(range(size)))

        # breadth-first closure under left multiplication by generators
        self.elements: List[Permutation] = [identity]
        self.words: List[Tuple[int, ...]] = [()]
        index = {identity: 0}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for s_pos, s in enumerate(self.generator_perms):
                new = self._compose(s, self.elements[g])
                if new not in index:
                    index[new] = len(self.elements)
                    self.elements.append(new)
                    self.words.append((s_pos,) + self.words[g])
                    queue.append(index[new])

        expected = PermutationGroup(self.generator_perms).order()
        if expected != len(self.elements):
            raise InvariantViolation(f"group closure found {len(self.elements)} elements, sympy says {expected}")

        self._index = index
        n = len(self.elements)
        self.table = [[index[self._compose(self.elements[a], self.elements[b])] for b in range(n)] for a in range(n)]
        self.inverse = [index[~p] for p in self.elements]
        self.generator_indices = [index[p] for p in self.generator_perms]

    @staticmethod
    def _compose(a: Permutation, b: Permutation) -> Permutation:
        # sympy's a*b applies a first
        return b * a

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, g: int) -> str:
        if g == 0:
            return "e"
        return "".join(f"g{s + 1}" for s in self.words[g])


# =========================
# Hopf algebra handles
# =========================

class HopfAlgebraHandle:
    kind: str = ""

    def one_key(self) -> Hashable:
        raise NotImplementedError

    def one(self) -> LinearCombination:
        return LinearCombination.basis(self.one_key())

    def element(self, key, coeff=1) -> LinearCombination:
        return LinearCombination.basis(key, coeff)

    def multiply_keys(self, a, b) -> Dict[Hashable, Fraction]:
        raise NotImplementedError

    def multiply(self, x: LinearCombination, y: LinearCombination) -> LinearCombination:
        pairs = []
        for a, ca in x.items():
            for b, cb in y.items():
                for k, c in self.multiply_keys(a, b).items():
                    pairs.append((k, ca * cb * c))
        return accumulate(pairs)

    def coproduct_key(self, key) -> LinearCombination:
        raise NotImplementedError

    def coproduct(self, x: LinearCombination) -> LinearCombination:
        total = LinearCombination()
        for key, c in x.items():
            total = total + self.coproduct_key(key).scale(c)
        return total

    def counit_key(self, key) -> Fraction:
        raise NotImplementedError

    def counit(self, x: LinearCombination) -> Fraction:
        return sum((c * self.counit_key(k) for k, c in x.items()), Fraction(0))

    def antipode(self, x: LinearCombination) -> LinearCombination:
        raise NotImplementedError

    def basis(self, max_degree: int) -> List[Hashable]:
        raise NotImplementedError

    def generators(self) -> List[Tuple[Hashable, str]]:
        raise NotImplementedError

    def key_degree(self, key) -> int:
        return 0

    def format_key(self, key) -> str:
        return str(key)


class EnvelopingHopf(HopfAlgebraHandle):
    kind = "enveloping"

    def __init__(self, lie: LieAlgebra):
        self.lie = lie
        self.U = enveloping_algebra(lie)

    def one_key(self):
        return (0,) * self.lie.dim

    def generator_key(self, i: int):
        exps = [0] * self.lie.dim
        exps[i] = 1
        return tuple(exps)

    def multiply_keys(self, a, b):
        return self.U.multiply_monomials(a, b)

    def coproduct_key(self, key):
        return LinearCombination(self.U.coproduct_monomial(key))

    def counit_key(self, key):
        return Fraction(1) if not any(key) else Fraction(0)

    def antipode(self, x):
        return LinearCombination(self.U.antipode(UeaElement(x)))

    def basis(self, max_degree):
        return self.U.basis(max_degree)

    def generators(self):
        return [(self.generator_key(i), PRIMITIVE) for i in range(self.lie.dim)]

    def key_degree(self, key):
        return monomial_degree(key)

    def format_key(self, key):
        return format_monomial(key, self.lie.basis)


class GroupHopf(HopfAlgebraHandle):
    kind = "group"

    def __init__(self, group: FiniteGroup):
        self.group = group

    def one_key(self):
        return self.group.identity

    def multiply_keys(self, a, b):
        return {self.group.mult(a, b): Fraction(1)}

    def coproduct_key(self, key):
        return LinearCombination({(key, key): 1})

    def counit_key(self, key):
        return Fraction(1)

    def antipode(self, x):
        return LinearCombination({self.group.inverse[g]: c for g, c in x.items()})

    def basis(self, max_degree=None):
        return list(range(self.group.order))

    def generators(self):
        return [(g, GROUPLIKE) for g in self.group.generator_indices]

    def format_key(self, key):
        return self.group.label(key)

    def integral(self) -> LinearCombination:
        """Normalized integral x0 = |G|^-1 sum_g g."""
        weight = Fraction(1, self.group.order)
        return LinearCombination({g: weight for g in range(self.group.order)})
