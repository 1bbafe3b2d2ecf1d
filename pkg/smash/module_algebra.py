# smash/module_algebra.py

"""
H-module algebras A at finite truncation.

A is either
  - U(r) truncated at filtration degree N (PBW monomials of the radical), or
  - Q[x_1..x_m] truncated at degree N.

Products that would leave the window raise TruncationOverflow instead of
being cut silently. The H-action is given on A's generators:
  - primitive generators act by derivations (Leibniz on words),
  - group-like generators act by unital automorphisms (multiplicative).
"""

from collections import deque
from fractions import Fraction
from typing import Dict, Hashable, List, Sequence, Tuple

from core.errors import InputError, TruncationOverflow
from core.exactlin import LinearCombination, accumulate
from core.liealg import LeviDecomposition, LieAlgebra
from core.uea import (
    PbwMonomial,
    enveloping_algebra,
    format_monomial,
    monomial_degree,
    monomial_to_word,
    monomials_up_to,
    word_to_monomial,
)
from smash.hopf import GROUPLIKE, PRIMITIVE, EnvelopingHopf, FiniteGroup, GroupHopf, HopfAlgebraHandle


# =========================
# Truncated algebras
# =========================

class TruncatedAlgebra:
    kind = ""

    def __init__(self, names: Sequence[str], max_degree: int):
        if max_degree < 0:
            raise InputError(f"truncation degree must be >= 0, got {max_degree}")
        self.names = tuple(names)
        self.m = len(self.names)
        self.max_degree = max_degree

    def basis(self, max_degree: int = None) -> List[PbwMonomial]:
        bound = self.max_degree if max_degree is None else max_degree
        if bound > self.max_degree:
            raise TruncationOverflow(bound, self.max_degree, "basis window")
        return monomials_up_to(self.m, bound)

    def one_key(self) -> PbwMonomial:
        return (0,) * self.m

    def one(self) -> LinearCombination:
        return LinearCombination.basis(self.one_key())

    def generator_key(self, i: int) -> PbwMonomial:
        exps = [0] * self.m
        exps[i] = 1
        return tuple(exps)

    def generator(self, i: int) -> LinearCombination:
        return LinearCombination.basis(self.generator_key(i))

    def degree(self, key: PbwMonomial) -> int:
        return monomial_degree(key)

    def _normal_word(self, word: Tuple[int, ...]) -> Dict[PbwMonomial, Fraction]:
        raise NotImplementedError

    def multiply_monomials(self, a: PbwMonomial, b: PbwMonomial) -> Dict[PbwMonomial, Fraction]:
        needed = monomial_degree(a) + monomial_degree(b)
        if needed > self.max_degree:
            raise TruncationOverflow(needed, self.max_degree)
        return self._normal_word(monomial_to_word(a) + monomial_to_word(b))

    def multiply(self, x: LinearCombination, y: LinearCombination) -> LinearCombination:
        pairs = []
        for a, ca in x.items():
            for b, cb in y.items():
                for k, c in self.multiply_monomials(a, b).items():
                    pairs.append((k, ca * cb * c))
        return accumulate(pairs)

    def word_element(self, word: Sequence[int]) -> LinearCombination:
        if len(word) > self.max_degree:
            raise TruncationOverflow(len(word), self.max_degree)
        return LinearCombination(self._normal_word(tuple(word)))

    def augmentation(self, x: LinearCombination) -> Fraction:
        return x.coefficient(self.one_key())

    def format_key(self, key: PbwMonomial) -> str:
        return format_monomial(key, self.names)


class TruncatedEnvelopingAlgebra(TruncatedAlgebra):
    kind = "enveloping"

    def __init__(self, lie: LieAlgebra, max_degree: int):
        super().__init__(lie.basis, max_degree)
        self.lie = lie
        self.U = enveloping_algebra(lie)

    def _normal_word(self, word):
        return self.U.normal_form(word)


class TruncatedPolynomialAlgebra(TruncatedAlgebra):
    kind = "polynomial"

    def _normal_word(self, word):
        return {word_to_monomial(word, self.m): Fraction(1)}


# =========================
# Module-algebra action
# =========================

class ModuleAlgebraAction:
    """
    Action of H on A fixed by the images of A's generators under each
    H-generator. Images must be linear in A's generators, so the action
    preserves degree.
    """

    def __init__(
        self,
        hopf: HopfAlgebraHandle,
        algebra: TruncatedAlgebra,
        generator_images: Dict[Hashable, Sequence[LinearCombination]],
        name: str = "",
    ):
        self.hopf = hopf
        self.algebra = algebra
        self.name = name or f"{hopf.kind} on {algebra.kind}"
        self.generator_kinds = dict(hopf.generators())

        for key, images in generator_images.items():
            if key not in self.generator_kinds:
                raise InputError(f"{hopf.format_key(key)} is not an H-generator", self.name)
            if len(images) != algebra.m:
                raise InputError(f"need {algebra.m} generator images for {hopf.format_key(key)}", self.name)
            for image in images:
                if any(algebra.degree(k) != 1 for k in image):
                    raise InputError("generator images must be linear in the generators of A", self.name)

        missing = [k for k in self.generator_kinds if k not in generator_images]
        if missing:
            raise InputError(f"no action given for {[hopf.format_key(k) for k in missing]}", self.name)

        self.generator_images = {k: tuple(v) for k, v in generator_images.items()}
        self._monomial_cache: Dict[Tuple[Hashable, PbwMonomial], LinearCombination] = {}
        self._tau_cache: Dict[Tuple[Hashable, PbwMonomial], LinearCombination] = {}

        if hopf.kind == "group":
            self._element_images = self._extend_to_group()

    # ---------------------
    # Group kind: images for every element
    # ---------------------

    def _apply_automorphism(self, images: Sequence[LinearCombination], x: LinearCombination) -> LinearCombination:
        total = LinearCombination()
        for key, c in x.items():
            out = self.algebra.one()
            for i in monomial_to_word(key):
                out = self.algebra.multiply(out, images[i])
            total = total + out.scale(c)
        return total

    def _extend_to_group(self) -> Dict[int, Tuple[LinearCombination, ...]]:
        group: FiniteGroup = self.hopf.group
        A = self.algebra
        element_images = {group.identity: tuple(A.generator(i) for i in range(A.m))}
        queue = deque([group.identity])

        while queue:
            g = queue.popleft()
            for s in group.generator_indices:
                composite = group.mult(s, g)
                s_images = self.generator_images[s]
                # (s o g)(x_i) = s(g(x_i))
                images = tuple(self._apply_automorphism(s_images, x) for x in element_images[g])
                if composite in element_images:
                    if element_images[composite] != images:
                        raise InputError(
                            f"generator matrices do not define a representation of {group.name}"
                            f" (conflict at {group.label(composite)})",
                            self.name,
                        )
                    continue
                element_images[composite] = images
                queue.append(composite)

        return element_images

    # ---------------------
    # Action on monomials
    # ---------------------

    def _derivation(self, images: Sequence[LinearCombination], x: LinearCombination) -> LinearCombination:
        """Leibniz rule over the generator word of each monomial."""
        A = self.algebra
        total = LinearCombination()
        for key, c in x.items():
            word = monomial_to_word(key)
            for p, letter in enumerate(word):
                image = images[letter]
                if image.is_zero():
                    continue
                left = A.word_element(word[:p])
                right = A.word_element(word[p + 1:])
                total = total + A.multiply(A.multiply(left, image), right).scale(c)
        return total

    def _apply_generator(self, key: Hashable, x: LinearCombination) -> LinearCombination:
        images = self.generator_images[key]
        if self.generator_kinds[key] == PRIMITIVE:
            return self._derivation(images, x)
        return self._apply_automorphism(images, x)

    def act_monomial(self, h_key: Hashable, a_key: PbwMonomial) -> LinearCombination:
        cached = self._monomial_cache.get((h_key, a_key))
        if cached is not None:
            return cached

        x = LinearCombination.basis(a_key)
        if self.hopf.kind == "group":
            result = self._apply_automorphism(self._element_images[h_key], x)
        else:
            # e^beta acts as the generator word applied right to left
            hopf: EnvelopingHopf = self.hopf
            result = x
            for i in reversed(monomial_to_word(h_key)):
                result = self._apply_generator(hopf.generator_key(i), result)

        self._monomial_cache[(h_key, a_key)] = result
        return result

    def twist_monomial(self, h_key: Hashable, a_key: PbwMonomial) -> LinearCombination:
        """h (x) a -> sum h'.a (x) h'', keyed by (A-monomial, H-key)."""
        cached = self._tau_cache.get((h_key, a_key))
        if cached is not None:
            return cached

        pairs = []
        # Delta(h) = sum h' (x) h''  ->  flip middle legs  ->  h'.a (x) h''
        for (h1, h2), c in self.hopf.coproduct_key(h_key).items():
            for a_out, ca in self.act_monomial(h1, a_key).items():
                pairs.append(((a_out, h2), c * ca))
        result = accumulate(pairs)

        self._tau_cache[(h_key, a_key)] = result
        return result

    def act(self, h: LinearCombination, a: LinearCombination) -> LinearCombination:
        """mu_{H,A}: h (x) a -> h.a"""
        pairs = []
        for h_key, ch in h.items():
            for a_key, ca in a.items():
                for k, c in self.act_monomial(h_key, a_key).items():
                    pairs.append((k, ch * ca * c))
        return accumulate(pairs)

    def h_basis(self, max_degree: int) -> List[Hashable]:
        return self.hopf.basis(max_degree)

    def a_basis(self) -> List[PbwMonomial]:
        return self.algebra.basis()


# =========================
# Constructors
# =========================

def levi_action(decomposition: LeviDecomposition, max_degree: int) -> ModuleAlgebraAction:
    """
    U(levi) acting on truncated U(rad) by derivations extending ad:
    X . r_i = [X, r_i], which lies in rad because rad is an ideal.
    """
    L = decomposition.algebra
    r = decomposition.radical_dim
    hopf = EnvelopingHopf(decomposition.levi_algebra)
    A = TruncatedEnvelopingAlgebra(decomposition.radical_algebra, max_degree)

    images = {}
    for j in range(decomposition.levi_dim):
        row = []
        for i in range(r):
            bracket = L.bracket_basis(r + j, i)
            row.append(LinearCombination({A.generator_key(k): c for k, c in bracket.items()}))
        images[hopf.generator_key(j)] = row

    return ModuleAlgebraAction(hopf, A, images, name=f"ad action on U({L.name}) radical")


def group_action(
    group: FiniteGroup,
    matrices: Sequence[Sequence[Sequence[Fraction]]],
    names: Sequence[str],
    max_degree: int,
) -> ModuleAlgebraAction:
    """
    G acting on truncated Q[x_1..x_m] by linear substitutions.
    matrices[s][j][i] is the coefficient of x_j in s.x_i (column i = image of x_i).
    """
    hopf = GroupHopf(group)
    A = TruncatedPolynomialAlgebra(names, max_degree)
    if len(matrices) != len(group.generator_indices):
        raise InputError("need one matrix per group generator", group.name)

    images = {}
    for s, matrix in zip(group.generator_indices, matrices):
        if len(matrix) != A.m or any(len(row) != A.m for row in matrix):
            raise InputError(f"generator matrices must be {A.m}x{A.m}", group.name)
        images[s] = [
            LinearCombination({A.generator_key(j): matrix[j][i] for j in range(A.m)})
            for i in range(A.m)
        ]

    return ModuleAlgebraAction(hopf, A, images, name=f"{group.name} on Q[{','.join(names)}]")


def permutation_matrices(group: FiniteGroup) -> List[List[List[Fraction]]]:
    """Matrices of g.x_i = x_{g(i)} for the group generators."""
    out = []
    for perm in group.generator_perms:
        m = [[Fraction(0)] * group.degree for _ in range(group.degree)]
        for i in range(group.degree):
            m[perm.array_form[i]][i] = Fraction(1)
        out.append(m)
    return out


def trivial_action(hopf: HopfAlgebraHandle, algebra: TruncatedAlgebra) -> ModuleAlgebraAction:
    """h . a = eps(h) a: primitives act by 0, group-likes by the identity."""
    images = {}
    for key, kind in hopf.generators():
        if kind == GROUPLIKE:
            images[key] = [algebra.generator(i) for i in range(algebra.m)]
        else:
            images[key] = [LinearCombination() for _ in range(algebra.m)]
    return ModuleAlgebraAction(hopf, algebra, images, name=f"trivial {hopf.kind} action")
