"""
Bracket-aware splitting shared by the element, group and G*<x> grammars
"""
from typing import List

from core.exceptions import ParseError

OPENERS = {'(': ')', '[': ']', '<': '>'}
CLOSERS = {v: k for k, v in OPENERS.items()}


def split_top_level(text: str, separator: str = ' ') -> List[str]:
    """Split on a separator that is not nested inside (), [] or <>.

    A space separator also swallows runs of whitespace. Empty pieces are
    dropped.
    """
    pieces: List[str] = []
    stack: List[str] = []
    current: List[str] = []
    whitespace = separator.isspace()

    for char in text:
        if char in OPENERS:
            stack.append(char)
        elif char in CLOSERS:
            if not stack or stack[-1] != CLOSERS[char]:
                raise ParseError(f"Unbalanced '{char}' in {text!r}")
            stack.pop()

        is_separator = char.isspace() if whitespace else char == separator
        if is_separator and not stack:
            pieces.append(''.join(current).strip())
            current = []
        else:
            current.append(char)

    if stack:
        raise ParseError(f"Unclosed '{stack[-1]}' in {text!r}")
    pieces.append(''.join(current).strip())
    return [piece for piece in pieces if piece]


def strip_brackets(text: str, opener: str) -> str:
    """Return the inside of a token wrapped in one bracket pair."""
    text = text.strip()
    closer = OPENERS[opener]
    if not (text.startswith(opener) and text.endswith(closer)):
        raise ParseError(f"Expected {opener}...{closer}, got {text!r}")
    return text[1:-1]


def parse_int(text: str, context: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"Invalid integer {text!r} in {context}")
