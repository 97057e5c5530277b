"""Words in a free group, their free and cyclic reductions.

Generators x1, x2, ... are written as the letters a, b, ... and their
inverses as the capital letters A, B, .... A word is stored as a string in
that encoding, which keeps long orbit words compact and lets reductions run
over bytes.
"""

from dataclasses import dataclass, field
from enum import Enum
import string
from typing import Iterator, List, Tuple

ALPHABET = string.ascii_lowercase
MAX_RANK = len(ALPHABET)

_INVERSE = [0] * 128
for _c in string.ascii_letters:
    _INVERSE[ord(_c)] = ord(_c.swapcase())
INVERSE_LETTER = {c: c.swapcase() for c in string.ascii_letters}
_RANK_LETTERS = [
    frozenset(ALPHABET[:r] + ALPHABET[:r].upper()) for r in range(MAX_RANK + 1)
]


class WordError(ValueError):
    """Raised for text that does not describe a word of the given rank."""


class Form(str, Enum):
    """How far a word has been reduced."""

    RAW = "raw"
    REDUCED = "reduced"
    CYCLIC = "cyclically-reduced"


@dataclass(frozen=True)
class Generator:
    """A generator x_index or its inverse.

    Attributes
    ----------
    index : int
        The generator index, starting at 1.
    sign : int
        +1 for the generator and -1 for its inverse.
    """

    index: int
    sign: int = 1

    def __post_init__(self):
        if not 1 <= self.index <= MAX_RANK:
            raise WordError("generator index must be in [1, %d]." % MAX_RANK)
        if self.sign not in (1, -1):
            raise WordError("generator sign must be +1 or -1.")

    @property
    def letter(self) -> str:
        """The letter encoding this generator."""
        c = ALPHABET[self.index - 1]
        return c if self.sign > 0 else c.upper()

    @classmethod
    def from_letter(cls, letter: str) -> "Generator":
        """Decode a single letter."""
        if len(letter) != 1 or letter not in INVERSE_LETTER:
            raise WordError("`%s` is not a generator letter." % letter)
        return cls(ALPHABET.index(letter.lower()) + 1, 1 if letter.islower() else -1)

    def inverse(self) -> "Generator":
        return Generator(self.index, -self.sign)


@dataclass(frozen=True)
class Word:
    """An element of the free group of some rank, written in letters.

    Attributes
    ----------
    letters : str
        The letters of the word, lowercase for generators and uppercase for
        inverses. The empty string is the identity.
    rank : int
        The rank of the ambient free group.
    form : Form
        Whether the letters are known to be freely or cyclically reduced.
    """

    letters: str = ""
    rank: int = 2
    form: Form = field(default=Form.RAW, compare=False)

    def __post_init__(self):
        if not 1 <= self.rank <= MAX_RANK:
            raise WordError("rank must be in [1, %d], got %d." % (MAX_RANK, self.rank))
        extra = set(self.letters) - _RANK_LETTERS[self.rank]
        if extra:
            raise WordError(
                "letters `%s` are not generators of rank %d."
                % ("".join(sorted(extra)), self.rank)
            )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters if self.letters else "1"

    def __iter__(self) -> Iterator[Generator]:
        return (Generator.from_letter(c) for c in self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    @property
    def generators(self) -> Tuple[Generator, ...]:
        """The letters decoded as generators."""
        return tuple(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @classmethod
    def generator(cls, index: int, rank: int = 2) -> "Word":
        """The word consisting of the single generator x_index."""
        return cls(Generator(index).letter, rank, Form.CYCLIC)


def parse_word(text: str, rank: int = 2) -> Word:
    """Read a word from its letter encoding.

    Parameters
    ----------
    text : str
        Letters a...z for the generators x1...x26 and A...Z for their
        inverses. Whitespace is ignored.
    rank : int
        The rank of the free group the word lives in.

    Returns
    -------
    Word
        The unreduced word with letters in order of appearance.

    Raises
    ------
    WordError
        For characters that are not letters or letters whose generator index
        exceeds the rank.
    """
    if not 1 <= rank <= MAX_RANK:
        raise WordError("rank must be in [1, %d], got %d." % (MAX_RANK, rank))
    letters = "".join(text.split())
    for pos, c in enumerate(letters):
        if c not in INVERSE_LETTER:
            raise WordError("unknown character `%s` at position %d." % (c, pos))
        index = ALPHABET.index(c.lower()) + 1
        if index > rank:
            raise WordError(
                "letter `%s` has index %d which exceeds the rank %d." % (c, index, rank)
            )
    return Word(letters, rank, Form.RAW)


def _free_reduce(letters: str) -> str:
    out = bytearray()
    for c in letters.encode("ascii"):
        if out and out[-1] == _INVERSE[c]:
            out.pop()
        else:
            out.append(c)
    return out.decode("ascii")


def _cyclic_core(letters: str) -> Tuple[int, int]:
    """Bounds of the cyclically reduced core of a freely reduced string."""
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == INVERSE_LETTER[letters[j]]:
        i += 1
        j -= 1
    return i, j + 1


def reduce(w: Word) -> Word:
    """Freely reduce a word by cancelling adjacent inverse pairs."""
    if w.form != Form.RAW:
        return w
    return Word(_free_reduce(w.letters), w.rank, Form.REDUCED)


def cyclic_reduce(w: Word) -> Tuple[Word, int]:
    """Get the cyclically reduced representative of a conjugacy class.

    Returns
    -------
    tuple of (Word, int)
        The cyclically reduced word and its length, which is the cyclically
        reduced word length of `w`.
    """
    if w.form == Form.CYCLIC:
        return w, len(w)
    letters = reduce(w).letters
    i, j = _cyclic_core(letters)
    core = letters[i:j]
    return Word(core, w.rank, Form.CYCLIC), len(core)


def cyclic_length(w: Word) -> int:
    """The cyclically reduced length of a word."""
    return cyclic_reduce(w)[1]


def inverse(w: Word) -> Word:
    """The inverse word (reversed with swapped cases)."""
    return Word(w.letters[::-1].swapcase(), w.rank, w.form)


def concat(u: Word, v: Word) -> Word:
    """Concatenate two words and freely reduce the result."""
    if u.rank != v.rank:
        raise WordError("can not multiply words of ranks %d and %d." % (u.rank, v.rank))
    return reduce(Word(u.letters + v.letters, u.rank, Form.RAW))


def conjugate(w: Word, by: Word) -> Word:
    """The reduced conjugate by * w * by^-1."""
    return concat(concat(by, w), inverse(by))


def letters_of(rank: int) -> str:
    """All letters of the given rank, generators first."""
    return ALPHABET[:rank] + ALPHABET[:rank].upper()


def random_word(rng, rank: int, length: int) -> Word:
    """Draw a uniformly random freely reduced word of a given length.

    Parameters
    ----------
    rng : numpy.random.Generator
        The random number generator to draw from.
    rank : int
        The rank of the free group.
    length : int
        The exact length of the returned word.
    """
    alphabet = letters_of(rank)
    letters: List[str] = []
    for _ in range(length):
        choices = alphabet
        if letters:
            choices = alphabet.replace(INVERSE_LETTER[letters[-1]], "")
        letters.append(choices[int(rng.integers(len(choices)))])
    return Word("".join(letters), rank, Form.REDUCED)


def cyclic_words(rank: int, max_length: int) -> List[Word]:
    """Enumerate all nonempty cyclically reduced words up to a length.

    Words are ordered by length and then by letter order of `letters_of`.
    """
    alphabet = letters_of(rank)
    words: List[Word] = []
    level = [""]
    for length in range(1, max_length + 1):
        level = [
            prefix + c
            for prefix in level
            for c in alphabet
            if not prefix or prefix[-1] != INVERSE_LETTER[c]
        ]
        words.extend(
            Word(w, rank, Form.CYCLIC)
            for w in level
            if length == 1 or w[0] != INVERSE_LETTER[w[-1]]
        )
    return words
