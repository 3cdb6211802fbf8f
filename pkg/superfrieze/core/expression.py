"""Expression parser - text input to SuperScalar

Grammar (see docs/EXPRESSION_GRAMMAR.md):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/')? factor)*        juxtaposition multiplies
    factor  := ('+' | '-') factor | power
    power   := atom ('^' ['+' | '-'] INTEGER)?
    atom    := INTEGER | NAME | '(' expr ')'
    NAME    := letters ( digits | '_' ['-'] digits )?

A name is odd when its letter part is listed under algebra.odd_names.
The text is checked token by token first so that errors carry an exact
position; SymPy then builds the expression tree, which is walked into a
SuperScalar with odd names as non-commutative symbols.
"""

import re
from tokenize import TokenError
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor, parse_expr, standard_transformations,
)

from .grassmann import (
    GeneratorId, Parity, SuperScalar, constant, generator, product, total_sum,
)
from ..utils.config import config
from ..utils.errors import ExpressionError
from ..utils.logger import logger

MAX_EXPONENT = 64

TRANSFORMATIONS = standard_transformations + (convert_xor,)

_TOKEN_RE = re.compile(r'''
    (?P<space>\s+)
  | (?P<number>\d+)
  | (?P<name>[A-Za-z]+(?:_-?\d+|\d+)?)
  | (?P<pow>\^|\*\*)
  | (?P<op>[-+*/])
  | (?P<lparen>\()
  | (?P<rparen>\))
''', re.VERBOSE)

_NAME_RE = re.compile(r'^([A-Za-z]+)(?:(\d+)|_(-?\d+))?$')


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def odd_names() -> frozenset:
    return frozenset(config.get('algebra.odd_names', []))


def parse_identifier(text: str, odd: Optional[Iterable[str]] = None) -> GeneratorId:
    """Map 'a1', 'xi', 'x_-2' to a GeneratorId

    Raises:
        ExpressionError: if text is not a generator name
    """
    match = _NAME_RE.match(text)
    if not match:
        raise ExpressionError("not a generator name", text, 0)
    name, index = match.group(1), match.group(2) or match.group(3)
    names = odd_names() if odd is None else frozenset(odd)
    parity = Parity.ODD if name in names else Parity.EVEN
    return GeneratorId(name, None if index is None else int(index), parity)


def tokenize(text: str) -> List[Token]:
    """Split text into tokens, rejecting characters outside the grammar"""
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            char = text[pos]
            if char == '.':
                raise ExpressionError("decimal numbers are not supported, use a fraction", text, pos)
            raise ExpressionError(f"unexpected character {char!r}", text, pos)
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    return tokens


def _check_exponent(tokens: Sequence[Token], k: int, text: str) -> int:
    """Validate the exponent after tokens[k] == '^'; returns the index of its last token"""
    j = k + 1
    if j < len(tokens) and tokens[j].kind == 'op' and tokens[j].text in '+-':
        j += 1
    if j >= len(tokens):
        raise ExpressionError("unexpected end of input", text, len(text))
    if tokens[j].kind != 'number':
        raise ExpressionError("exponent must be an integer", text, tokens[j].position)
    if int(tokens[j].text) > MAX_EXPONENT:
        raise ExpressionError(f"exponent larger than {MAX_EXPONENT}", text, tokens[j].position)
    return j


# (operator position, start, end) of a divisor or of a base raised to a negative power
Inversion = Tuple[int, int, int]


def _span(tokens: Sequence[Token], first: int, last: int) -> Tuple[int, int]:
    return tokens[first].position, tokens[last].position + len(tokens[last].text)


def _operand_end(tokens: Sequence[Token], j: int) -> Optional[int]:
    """Index of the last token of the factor starting at tokens[j]"""
    while j < len(tokens) and tokens[j].kind == 'op' and tokens[j].text in '+-':
        j += 1
    if j >= len(tokens):
        return None
    if tokens[j].kind == 'lparen':
        depth = 0
        for end in range(j, len(tokens)):
            depth += {'lparen': 1, 'rparen': -1}.get(tokens[end].kind, 0)
            if depth == 0:
                j = end
                break
        else:
            return None
    elif tokens[j].kind not in ('number', 'name'):
        return None
    if j + 1 < len(tokens) and tokens[j + 1].kind == 'pow':
        j += 1
        if j + 1 < len(tokens) and tokens[j + 1].kind == 'op' and tokens[j + 1].text in '+-':
            j += 1
        if j + 1 < len(tokens) and tokens[j + 1].kind == 'number':
            j += 1
    return j


def _normalize(text: str, tokens: Sequence[Token]) -> Tuple[str, Dict[str, GeneratorId], List[Inversion]]:
    """Check the token stream and rebuild it as SymPy source

    Identifiers are renamed to g0, g1, ... so that no name can clash with
    Python keywords or SymPy globals.  Also returns every divisor and every
    base under a negative exponent, so a zero denominator can be located.
    """
    names = odd_names()
    aliases: Dict[str, str] = {}
    generators: Dict[str, GeneratorId] = {}
    pieces: List[str] = []
    opened: List[int] = []
    inversions: List[Inversion] = []
    operand = 0
    expect_operand = True
    k = 0
    while k < len(tokens):
        tok = tokens[k]
        starts_operand = tok.kind in ('number', 'name', 'lparen')
        if starts_operand and not expect_operand:
            pieces.append('*')
        if tok.kind == 'number':
            pieces.append(tok.text)
            operand = k
            expect_operand = False
        elif tok.kind == 'name':
            nxt = tokens[k + 1] if k + 1 < len(tokens) else None
            plain = tok.text.isalpha()
            if plain and nxt is not None and nxt.kind == 'lparen' \
                    and nxt.position == tok.position + len(tok.text):
                raise ExpressionError(f"function calls are not supported: {tok.text}",
                                      text, tok.position)
            if tok.text not in aliases:
                alias = f"g{len(aliases)}"
                aliases[tok.text] = alias
                generators[alias] = parse_identifier(tok.text, names)
            pieces.append(aliases[tok.text])
            operand = k
            expect_operand = False
        elif tok.kind == 'lparen':
            opened.append(k)
            pieces.append('(')
            expect_operand = True
        elif tok.kind == 'rparen':
            if not opened:
                raise ExpressionError("unbalanced ')'", text, tok.position)
            if expect_operand:
                raise ExpressionError("unexpected ')'", text, tok.position)
            operand = opened.pop()
            pieces.append(')')
        elif tok.kind == 'pow':
            if expect_operand:
                raise ExpressionError("unexpected '^'", text, tok.position)
            last = _check_exponent(tokens, k, text)
            if tokens[k + 1].text == '-':
                inversions.append((tok.position, *_span(tokens, operand, k - 1)))
            pieces.append('^' + ''.join(t.text for t in tokens[k + 1:last + 1]))
            k = last
        else:
            if expect_operand and tok.text in '*/':
                raise ExpressionError(f"unexpected {tok.text!r}", text, tok.position)
            if tok.text == '/':
                end = _operand_end(tokens, k + 1)
                if end is not None:
                    inversions.append((tok.position, *_span(tokens, k + 1, end)))
            pieces.append(tok.text)
            expect_operand = True
        k += 1
    if expect_operand:
        raise ExpressionError("unexpected end of input", text, len(text))
    if opened:
        raise ExpressionError("unclosed '('", text, tokens[opened[-1]].position)
    return ' '.join(pieces), generators, inversions


def _zero_denominator(text: str, inversions: Sequence[Inversion]) -> int:
    """Position of the first '/' or '^' whose denominator is zero"""
    for position, lo, hi in inversions:
        try:
            denominator = parse_superscalar(text[lo:hi])
        except ExpressionError as e:
            raise ExpressionError(e.reason, text, lo + e.position) from e
        if not denominator:
            return position
    return inversions[0][0] if inversions else 0


def _walk(expr, generators: Dict[str, GeneratorId], text: str) -> SuperScalar:
    if expr.is_Rational:
        return constant(Fraction(int(expr.p), int(expr.q)))
    if expr.is_Symbol:
        return generator(generators[expr.name])
    if expr.is_Add:
        return total_sum(_walk(arg, generators, text) for arg in expr.args)
    if expr.is_Mul:
        # commutative factors first, then non-commutative ones in written order
        return product(_walk(arg, generators, text) for arg in expr.args)
    if expr.is_Pow and expr.args[1].is_Integer:
        # exponents were checked token by token
        base, exponent = expr.args
        return _walk(base, generators, text) ** int(exponent)
    raise ExpressionError(f"unsupported construct {type(expr).__name__}", text, 0)


def parse_superscalar(text: str) -> SuperScalar:
    """Parse an expression in the input grammar

    Args:
        text: e.g. "a1 a2 - 2 + b1 b2" or "x^-1 (1 + xi eta)"

    Returns:
        The SuperScalar value

    Raises:
        ExpressionError: on malformed input, with the 0-based position
        NotInvertible: when dividing by a non-monomial
    """
    tokens = tokenize(text)
    source, generators, inversions = _normalize(text, tokens)
    local_dict = {
        alias: sympy.Symbol(alias, commutative=gen.parity == Parity.EVEN)
        for alias, gen in generators.items()
    }
    try:
        expr = parse_expr(source, local_dict=local_dict,
                          transformations=TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TokenError, TypeError) as e:
        raise ExpressionError(f"could not parse: {e}", text, 0) from e
    if expr.has(sympy.zoo, sympy.nan):
        raise ExpressionError("division by zero", text, _zero_denominator(text, inversions))
    value = _walk(expr, generators, text)
    logger.debug(f"Parsed {text!r} into {len(value)} terms")
    return value


def parse_scalar_list(text: str) -> List[SuperScalar]:
    """Comma-separated expressions; error positions refer to the whole list"""
    values: List[SuperScalar] = []
    offset = 0
    for piece in text.split(','):
        try:
            values.append(parse_superscalar(piece))
        except ExpressionError as e:
            raise ExpressionError(e.reason, text, offset + e.position) from e
        offset += len(piece) + 1
    return values


def coerce_scalar(value: Any) -> SuperScalar:
    """Accept an expression string, an integer or the JSON term list"""
    if isinstance(value, SuperScalar):
        return value
    if isinstance(value, bool):
        raise ExpressionError("booleans are not scalars", str(value), 0)
    if isinstance(value, int):
        return constant(value)
    if isinstance(value, str):
        return parse_superscalar(value)
    if isinstance(value, list):
        return SuperScalar.from_dict(value)
    raise ExpressionError(f"cannot read a scalar from {type(value).__name__}", str(value), 0)


def coerce_scalars(values: Any) -> List[SuperScalar]:
    """A list of scalars, or a comma-separated string of expressions"""
    if isinstance(values, str):
        return parse_scalar_list(values)
    if not isinstance(values, (list, tuple)):
        raise ExpressionError("expected a list of scalars", str(values), 0)
    return [coerce_scalar(x) for x in values]
