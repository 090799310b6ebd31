"""S-expression text format for terms.

Grammar, by example::

    x                  the adjoined indeterminate
    x:f                indeterminate indexed by morphism f (theta output)
    c:s                diagram constant for element s; c:"(12)" when quoting is needed
    c:s:X@i            same, with an explicit sort (only needed where the sort
                       cannot be inferred from the enclosing symbol)
    y                  a context variable, or a 0-ary function symbol
    (m@i x c:s)        function application
    (alpha f t)        the transition symbol alpha@f@A, A inferred from t

Element and variable names may not contain whitespace or parentheses
unless quoted.
"""

import json
import re

from isokit import terms as T
from isokit.errors import ParseError

_TOKEN = re.compile(r'\(|\)|(?:[^\s()"]|"(?:[^"\\]|\\.)*")+')
_BARE = re.compile(r"^[A-Za-z0-9_+\-.*^'<>=!?/]+$")


def tokenize(text):
    pos = 0
    out = []
    for m in _TOKEN.finditer(text):
        gap = text[pos:m.start()]
        if gap.strip():
            raise ParseError(f"unexpected text {gap.strip()!r} in term")
        out.append(m.group(0))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError(f"unexpected text {text[pos:].strip()!r} in term")
    return out


def read(text):
    """Parse text into nested lists of string atoms."""
    toks = tokenize(text)
    if not toks:
        raise ParseError("empty term")
    stack = [[]]
    for tok in toks:
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if len(stack) == 1:
                raise ParseError("unbalanced ')'")
            done = stack.pop()
            if not done:
                raise ParseError("empty application '()'")
            stack[-1].append(done)
        else:
            stack[-1].append(tok)
    if len(stack) != 1:
        raise ParseError("unbalanced '('")
    if len(stack[0]) != 1:
        raise ParseError("expected exactly one term")
    return stack[0][0]


def quote(name):
    return name if _BARE.match(name) else json.dumps(name)


def unquote(text):
    if text.startswith('"'):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad quoted name {text}") from exc
    return text


def split_const(atom):
    """``c:s`` or ``c:s:SORT`` -> (value, sort or None)."""
    rest = atom[2:]
    if rest.startswith('"'):
        m = re.match(r'"(?:[^"\\]|\\.)*"', rest)
        if m is None:
            raise ParseError(f"bad constant {atom}")
        value = unquote(m.group(0))
        tail = rest[m.end():]
    else:
        value, _, tail = rest.partition(":")
        tail = ":" + tail if _ else ""
    if tail and not tail.startswith(":"):
        raise ParseError(f"bad constant {atom}")
    sort = tail[1:] or None
    if not value:
        raise ParseError(f"empty constant name in {atom}")
    return value, sort


def format_term(t, annotate=False):
    """Render a term; ``annotate`` adds the sort to a bare top-level constant."""
    if t.kind == "var":
        return t.head
    if t.kind == "ind":
        return "x" if t.head is None else f"x:{quote(t.head)}"
    if t.kind == "const":
        s = f"c:{quote(t.head)}"
        return f"{s}:{t.sort}" if annotate else s
    if t.head.startswith("alpha@"):
        f = t.head.split("@")[1]
        return f"(alpha {quote(f)} {format_term(t.args[0])})"
    if not t.args:
        return t.head
    return "(" + " ".join([t.head] + [format_term(a) for a in t.args]) + ")"


class TermReader:
    """Builds sorted terms from s-expressions against a symbol table.

    ``funs`` maps symbol name to ``(arg_sorts, result_sort)``; ``variables``
    maps variable name to sort. ``x_sort`` enables the plain indeterminate,
    ``indexed_sort`` enables ``x:f`` (mapping f to its sort). ``alpha`` is a
    callable ``(f, arg_sort) -> (symbol, result_sort)`` and ``alpha_sorts`` a
    callable ``f -> candidate argument sorts``. ``check_const(value, sort)``
    validates diagram constants.
    """

    def __init__(self, funs, variables=None, x_sort=None, indexed_sort=None,
                 alpha=None, alpha_sorts=None, check_const=None):
        self.funs = funs
        self.variables = variables or {}
        self.x_sort = x_sort
        self.indexed_sort = indexed_sort
        self.alpha = alpha
        self.alpha_sorts = alpha_sorts
        self.check_const = check_const

    def parse(self, text, expected=None):
        return self.build(read(text), expected)

    def build(self, expr, expected=None):
        t = self._build(expr, expected)
        if expected is not None and t.sort != expected:
            raise ParseError(f"term {format_term(t)} has sort {t.sort}, expected {expected}")
        return t

    def _build(self, expr, expected):
        if isinstance(expr, str):
            return self._atom(expr, expected)
        head, *rest = expr
        if not isinstance(head, str):
            raise ParseError("application head must be a symbol")
        if head == "alpha":
            return self._alpha(rest, expected)
        if head not in self.funs:
            raise ParseError(f"unknown function symbol {head!r}")
        arg_sorts, result = self.funs[head]
        if len(rest) != len(arg_sorts):
            raise ParseError(f"{head} expects {len(arg_sorts)} arguments, got {len(rest)}")
        args = [self.build(a, s) for a, s in zip(rest, arg_sorts)]
        return T.app(head, args, result)

    def _alpha(self, rest, expected):
        if self.alpha is None:
            raise ParseError("alpha is not available in this context")
        if len(rest) != 2 or not isinstance(rest[0], str):
            raise ParseError("alpha expects (alpha MORPHISM TERM)")
        f = unquote(rest[0])
        cands = list(self.alpha_sorts(f))
        if not cands:
            raise ParseError(f"unknown morphism {f!r}")
        arg = self._build(rest[1], cands[0] if len(cands) == 1 else None)
        symbol, result = self.alpha(f, arg.sort)
        return T.app(symbol, [arg], result)

    def _atom(self, atom, expected):
        if atom in self.variables:
            return T.var(atom, self.variables[atom])
        if atom == "x":
            if self.x_sort is None:
                raise ParseError("indeterminate x is not available in this context")
            return T.ind(self.x_sort)
        if atom.startswith("x:") and self.indexed_sort is not None:
            f = unquote(atom[2:])
            sort = self.indexed_sort(f)
            if sort is None:
                raise ParseError(f"no indexed indeterminate x:{f}")
            return T.ind(sort, f)
        if atom.startswith("c:"):
            value, sort = split_const(atom)
            sort = sort or expected
            if sort is None:
                raise ParseError(f"cannot infer the sort of {atom}; write c:VALUE:SORT")
            if self.check_const is not None:
                self.check_const(value, sort)
            return T.const(value, sort)
        name = unquote(atom)
        if name in self.variables:
            return T.var(name, self.variables[name])
        if name in self.funs:
            arg_sorts, result = self.funs[name]
            if arg_sorts:
                raise ParseError(f"{name} expects {len(arg_sorts)} arguments")
            return T.app(name, [], result)
        raise ParseError(f"unknown name {name!r}")
