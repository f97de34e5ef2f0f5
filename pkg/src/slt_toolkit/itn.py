"""Rule-based inverse text normalization for display formatting.

Restores digits from spelled-out German numbers, uppercases sentence
starts and appends a terminal period. This is a deliberately small
approximation of a full ITN service: noun recasing, date re-contraction
and comma placement are out of scope.
"""

from __future__ import annotations

from .numbers_de import parse_number_de

# Standalone "ein"/"eine" are (almost always) articles, not the number one.
_ARTICLE_WORDS = {"ein", "eine"}

# Longest run of adjacent tokens tried as one spelled number ("zwei
# millionen" as well as the joined "zweimillionen").
_MAX_RUN = 4


def contract_numbers_de(text: str) -> str:
    """Replace maximal runs of German number words with digit strings."""
    tokens = text.split()
    out: list[str] = []
    i = 0
    while i < len(tokens):
        best_len = 0
        best_value = None
        for j in range(i, min(i + _MAX_RUN, len(tokens))):
            value = parse_number_de("".join(tokens[i:j + 1]))
            if value is not None:
                best_len = j - i + 1
                best_value = value
        if best_value is not None and not (
                best_len == 1 and tokens[i] in _ARTICLE_WORDS):
            out.append(str(best_value))
            i += best_len
        else:
            out.append(tokens[i])
            i += 1
    return " ".join(out)


_TERMINAL = (".", "!", "?")


def restore_display(text: str) -> str:
    """Contract numbers, capitalize the sentence start, add a final period."""
    if not text.strip():
        return text
    result = contract_numbers_de(text)
    chars = list(result)
    capitalize_next = True
    for k, ch in enumerate(chars):
        if capitalize_next and ch.isalpha():
            chars[k] = ch.upper()
            capitalize_next = False
        elif ch in _TERMINAL:
            capitalize_next = True
    result = "".join(chars)
    if not result.rstrip().endswith(_TERMINAL):
        result = result.rstrip() + "."
    return result
