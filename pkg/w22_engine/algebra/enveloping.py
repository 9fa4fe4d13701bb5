"""
Words of U(W(2,2)) and their PBW normal form.

A word is a tuple of generators read left to right. A word is in normal form
when its letters are weakly increasing for `GeneratorMode.pbw_key`:

    C^k · W_{−m₁}…W_{−m_s} · W₀^a · W_{p₁}…W_{p_u} · L_{−n₁}…L_{−n_t} · L₀^b · L_{q₁}…L_{q_v}

Rewriting replaces the first adjacent inversion xy by yx + [x, y]. A swap
removes exactly one inversion and keeps the length, a bracket term shortens
the word by one, so (length, inversions) decreases lexicographically.
"""
import re
from collections import defaultdict
from collections.abc import Mapping
from fractions import Fraction

from algebra.lie import adjoint, bracket, parse_generator
from core.exceptions import ParseError
from core.rationals import format_rational


def render_word(word):
    return ''.join(str(letter) for letter in word) or '1'


def word_key(word):
    return len(word), tuple(letter.pbw_key() for letter in word)


def inversions(word):
    """Number of letter pairs out of PBW order"""
    keys = [letter.pbw_key() for letter in word]
    return sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys))
               if keys[i] > keys[j])


def _first_inversion(word):
    for index in range(len(word) - 1):
        if word[index].pbw_key() > word[index + 1].pbw_key():
            return index
    return None


def is_normal(word):
    return _first_inversion(word) is None


class UEAElement(Mapping):
    """Finite combination of PBW-normal words"""

    def __init__(self, terms=None):
        self._terms = {}
        for word, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                self._terms[tuple(word)] = coefficient

    @classmethod
    def from_words(cls, terms):
        """Normal-orders an arbitrary combination of words"""
        result = cls()
        for word, coefficient in terms.items():
            result = result + normal_order(word) * coefficient
        return result

    @classmethod
    def identity(cls):
        return cls({(): 1})

    @classmethod
    def generator(cls, letter):
        return cls({(letter,): 1})

    def __getitem__(self, word):
        return self._terms[word]

    def __iter__(self):
        return iter(sorted(self._terms, key=word_key))

    def __len__(self):
        return len(self._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        terms = dict(self._terms)
        for word, coefficient in other.items():
            terms[word] = terms.get(word, 0) + coefficient
        return UEAElement(terms)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return multiply(self, other)
        return UEAElement({word: coefficient * other
                           for word, coefficient in self._terms.items()})

    def __rmul__(self, scalar):
        return self * scalar

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join(
            '{coefficient} * {word}'.format(
                coefficient=format_rational(self[word]), word=render_word(word))
            for word in self)


def normal_order(word):
    """Rewrites `word` into PBW normal form with xy = yx + [x, y]"""
    pending = defaultdict(Fraction)
    pending[tuple(word)] = Fraction(1)
    normal = defaultdict(Fraction)
    while pending:
        current, coefficient = pending.popitem()
        if not coefficient:
            continue
        index = _first_inversion(current)
        if index is None:
            normal[current] += coefficient
            continue
        x, y = current[index], current[index + 1]
        head, tail = current[:index], current[index + 2:]
        pending[head + (y, x) + tail] += coefficient
        for letter, structure_constant in bracket(x, y).items():
            pending[head + (letter,) + tail] += coefficient * structure_constant
    return UEAElement(normal)


def multiply(a, b):
    result = defaultdict(Fraction)
    for left, alpha in a.items():
        for right, beta in b.items():
            for word, gamma in normal_order(left + right).items():
                result[word] += alpha * beta * gamma
    return UEAElement(result)


def adjoint_word(word):
    """Reversed word with every letter replaced by its adjoint"""
    return tuple(adjoint(letter) for letter in reversed(word))


def adjoint_element(a):
    """Anti-automorphism extending the generator adjoint"""
    return UEAElement.from_words(
        {adjoint_word(word): coefficient for word, coefficient in a.items()})


def commutator(a, b):
    return multiply(a, b) - multiply(b, a)


WORD_PATTERN = re.compile(r'[LW]\(\s*[+-]?\d+\s*\)|C')


def parse_word(text):
    """Reads "W(-2)W(-2)L(-3)" style text; "1" or "" is the empty word"""
    text = ''.join(text.split())
    if text in ('', '1'):
        return ()
    letters = WORD_PATTERN.findall(text)
    if ''.join(letters) != text:
        raise ParseError('"{text}" is not a word of generators'.format(text=text))
    return tuple(parse_generator(letter) for letter in letters)
