import pickle
import threading

import pytest

from isokit import terms as T
from isokit.errors import ParseError
from isokit.sexpr import TermReader, format_term, quote, read, split_const, tokenize, unquote


def test_interning_gives_identity():
    a = T.app("m", [T.var("x", "X"), T.const("1", "X")], "X")
    b = T.app("m", [T.var("x", "X"), T.const("1", "X")], "X")
    assert a is b
    assert T.var("x", "X") is not T.var("x", "Y")


def test_pickle_reinterns():
    t = T.app("inv", [T.ind("X@i", None)], "X@i")
    assert pickle.loads(pickle.dumps(t)) is t


def test_concurrent_interning_is_consistent():
    out = []

    def work():
        out.append([T.app("m", [T.const(str(k), "X"), T.ind("X")], "X") for k in range(200)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    for row in out[1:]:
        assert all(a is b for a, b in zip(row, out[0]))


def test_size_depth_subterms():
    x = T.var("x", "X")
    t = T.app("m", [x, T.app("inv", [x], "X")], "X")
    assert T.size(t) == 4
    assert T.depth(t) == 2
    assert [u.head for u in T.subterms(t)] == ["m", "x", "inv", "x"]


def test_sort_key_total_and_deterministic():
    ts = [T.const(str(k), "X") for k in (3, 1, 2)] + [T.ind("X")]
    assert sorted(ts, key=T.sort_key) == sorted(reversed(ts), key=T.sort_key)


def test_tokenize_and_read():
    assert tokenize('(m x c:"(12)")') == ["(", "m", "x", 'c:"(12)"', ")"]
    assert read("(a (b c) d)") == ["a", ["b", "c"], "d"]
    for bad in ("(a", "a)", "()", ""):
        with pytest.raises(ParseError):
            read(bad)


def test_quoting_roundtrip():
    for name in ("a", "(12)", "x y", 'q"'):
        assert unquote(quote(name)) == name
    assert quote("abc") == "abc"
    assert split_const('c:"(12)":X@*') == ("(12)", "X@*")
    assert split_const("c:3") == ("3", None)


def test_reader_sorts_and_errors():
    funs = {"m": (("X", "X"), "X"), "e": ((), "X"), "inv": (("X",), "X")}
    r = TermReader(funs, variables={"y": "X"}, x_sort="X")
    t = r.parse("(m y (inv e))")
    assert t.sort == "X" and format_term(t) == "(m y (inv e))"
    assert r.parse("x") is T.ind("X")
    assert r.parse("(m c:1 x)").args[0] is T.const("1", "X")
    with pytest.raises(ParseError):
        r.parse("(m y)")
    with pytest.raises(ParseError):
        r.parse("(q y)")
    with pytest.raises(ParseError):
        r.parse("c:1")
