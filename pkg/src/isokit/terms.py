"""Hash-consed first-order terms.

Every term is built through the factories below and interned, so two
structurally equal terms are the same object and ``==`` is identity.

Kinds:

* ``var``   -- a variable of a sequent context (``head`` is its name)
* ``app``   -- a function symbol applied to arguments (constants are 0-ary)
* ``const`` -- a diagram constant naming a carrier element (``head`` is the element)
* ``ind``   -- an adjoined indeterminate; ``head`` is None for the plain
  indeterminate or a morphism name for the indexed ones produced by theta
"""

import threading
import weakref

__all__ = ["Term", "var", "app", "const", "ind", "subterms", "size", "depth", "sort_key"]

_TABLE = weakref.WeakValueDictionary()
_LOCK = threading.Lock()


class Term:
    __slots__ = ("kind", "head", "sort", "args", "_key", "__weakref__")

    def __init__(self, kind, head, sort, args):
        self.kind = kind
        self.head = head
        self.sort = sort
        self.args = args
        self._key = None

    def __repr__(self):
        from isokit.sexpr import format_term

        return f"Term({format_term(self)!r} : {self.sort})"

    def __reduce__(self):
        return (_intern, (self.kind, self.head, self.sort, self.args))

    @property
    def is_var(self):
        return self.kind == "var"

    @property
    def is_app(self):
        return self.kind == "app"

    @property
    def is_const(self):
        return self.kind == "const"

    @property
    def is_ind(self):
        return self.kind == "ind"


def _intern(kind, head, sort, args):
    key = (kind, head, sort, args)
    t = _TABLE.get(key)
    if t is not None:
        return t
    with _LOCK:
        t = _TABLE.get(key)
        if t is None:
            t = Term(kind, head, sort, args)
            _TABLE[key] = t
        return t


def var(name, sort):
    return _intern("var", name, sort, ())


def app(symbol, args, sort):
    return _intern("app", symbol, sort, tuple(args))


def const(value, sort):
    return _intern("const", value, sort, ())


def ind(sort, label=None):
    return _intern("ind", label, sort, ())


def subterms(t):
    """All subterms, pre-order, including ``t`` itself."""
    stack = [t]
    while stack:
        u = stack.pop()
        yield u
        stack.extend(reversed(u.args))


def size(t):
    return sum(1 for _ in subterms(t))


def depth(t):
    if not t.args:
        return 0
    return 1 + max(depth(a) for a in t.args)


def sort_key(t):
    """Structural total order, used wherever output must be deterministic."""
    if t._key is None:
        t._key = (t.kind, str(t.head), t.sort, tuple(sort_key(a) for a in t.args))
    return t._key
