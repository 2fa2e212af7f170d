import random

import pytest
from hypothesis import given, settings, strategies as st

from wosnet import graph, pajek
from wosnet.pajek import (ONE_MODE, TWO_MODE, PajekDocument, PajekError, PajekValidationError,
                          format_net, read_clu, read_net, read_vec, write_clu, write_net, write_vec)

TWO_MODE_FILE = b'*Vertices 2 1\n1 "d1"\n2 "A"\n*Edges\n1 2 1\n'


def test_write_two_mode_example(tmp_path):
    doc = pajek.from_bipartite(graph.build_bipartite([("d1", "A")]))
    p = tmp_path / "x.net"
    n = write_net(doc, p)
    assert p.read_bytes() == TWO_MODE_FILE
    assert n == len(TWO_MODE_FILE)


def test_read_two_mode_example():
    doc = read_net(TWO_MODE_FILE)
    assert (doc.kind, doc.n_vertices, doc.n_rows, doc.edges) == (TWO_MODE, 2, 1, [(1, 2, 1)])
    assert doc.vertices == [(1, "d1"), (2, "A")]


def test_quote_doubling():
    doc = PajekDocument(ONE_MODE, ['He said "hi"'])
    assert format_net(doc) == '*Vertices 1\n1 "He said ""hi"""\n*Edges\n'
    assert read_net(format_net(doc).encode()).labels == ['He said "hi"']


def test_validation_before_write(tmp_path):
    p = tmp_path / "bad.net"
    bad = [
        PajekDocument(ONE_MODE, ["a", ""]),
        PajekDocument(ONE_MODE, ["a"], [(1, 2, 1)]),
        PajekDocument(TWO_MODE, ["r", "c"], [(2, 1, 1)], n_rows=1),
        PajekDocument(TWO_MODE, ["r", "s"], [(1, 2, 1)], n_rows=2),
        PajekDocument(ONE_MODE, ["a\nb"]),
    ]
    for doc in bad:
        with pytest.raises(PajekValidationError):
            write_net(doc, p)
        assert not p.exists()


def test_arcs_symmetrised():
    doc = read_net(b"*Vertices 2\n1 a\n2 b\n*Arcs\n1 2 1\n2 1 1\n")
    assert doc.edges == [(1, 2, 2)]
    assert any("Arcs" in w for w in doc.warnings)


def test_arcs_oracle():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(2, 8)
        arcs = [(rng.randint(1, n), rng.randint(1, n), rng.randint(1, 5)) for _ in range(rng.randint(1, 20))]
        arcs = [(a, b, w) for a, b, w in arcs if a != b]
        text = f"*Vertices {n}\n" + "".join(f"{i} v{i}\n" for i in range(1, n + 1)) + "*Arcs\n"
        text += "".join(f"{a} {b} {w}\n" for a, b, w in arcs)
        got = {(u, v): w for u, v, w in read_net(text.encode()).edges}
        warc = {}
        for a, b, w in arcs:
            warc[(a, b)] = warc.get((a, b), 0) + w
        expect = {}
        for (a, b), w in warc.items():
            key = (min(a, b), max(a, b))
            expect[key] = warc.get((key[0], key[1]), 0) + warc.get((key[1], key[0]), 0)
        assert got == expect


def test_tolerant_reader():
    text = (b"% comment\r\n*Network test\r\n*Vertices 3\r\n1 \"a b\" 0.1 0.2 0.5\r\n2 plain\r\n"
            b"*Edges\r\n1 2\r\n")
    doc = read_net(text)
    assert doc.labels == ["a b", "plain", "3"]
    assert doc.edges == [(1, 2, 1)]
    assert len(doc.warnings) == 2


@pytest.mark.parametrize("text,fragment", [
    (b"1 a\n", "before *Vertices"),
    (b"*Edges\n1 2\n", "before *Vertices"),
    (b"", "no *Vertices"),
    (b"*Vertices 2\n3 c\n", "outside"),
    (b"*Vertices 2\n1 a\n*Edges\n1 5 1\n", "outside"),
    (b"*Vertices 3 1\n*Edges\n2 3 1\n", "row to a column"),
    (b"*Vertices 2\n*Edgeslist\n1 2\n", "not supported"),
    (b"*Vertices 2\n1 \"open\n", "unterminated"),
    (b"*Vertices x\n", "bad *Vertices"),
    (b"*Vertices 2\n*Edges\n1 2 heavy\n", "not a number"),
    (b"*Vertices 2\n*Matrix\n", "unsupported"),
])
def test_structured_errors(text, fragment):
    with pytest.raises(PajekError) as ei:
        read_net(text)
    assert fragment in str(ei.value)


def test_fuzzed_truncations_never_crash():
    rng = random.Random(0)
    base = format_net(PajekDocument(TWO_MODE, ["d1", "d 2", 'q"x', "Zürich", "B"],
                                    [(1, 3, 1), (2, 4, 2), (1, 5, 3)], n_rows=2)).encode()
    for cut in range(len(base) + 1):
        try:
            read_net(base[:cut])
        except PajekError:
            pass
    for _ in range(2_000):
        data = bytearray(base)
        for _ in range(rng.randint(1, 4)):
            data[rng.randrange(len(data))] = rng.randrange(256)
        try:
            read_net(bytes(data))
        except PajekError:
            pass


label_st = st.text(alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\r\n"),
                   min_size=1, max_size=12)


@st.composite
def documents(draw):
    kind = draw(st.sampled_from([ONE_MODE, TWO_MODE]))
    labels = draw(st.lists(label_st, min_size=0, max_size=10))
    n = len(labels)
    if kind == TWO_MODE:
        nr = draw(st.integers(0, n))
        if 0 < nr < n:
            edge = st.tuples(st.integers(1, nr), st.integers(nr + 1, n), st.integers(1, 50))
            edges = draw(st.lists(edge, max_size=15))
        else:
            edges = []
        return PajekDocument(kind, labels, edges, nr)
    if n:
        w = st.one_of(st.integers(1, 10**6), st.floats(0.001, 1e6, allow_nan=False))
        edges = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n), w), max_size=15))
    else:
        edges = []
    return PajekDocument(kind, labels, edges)


@settings(max_examples=300)
@given(documents())
def test_round_trip(doc):
    first = format_net(doc).encode()
    back = read_net(first)
    assert back == doc
    assert format_net(back).encode() == first
    if doc.kind == TWO_MODE:
        assert all(u <= back.n_rows < v for u, v, _ in back.edges)


def test_clu_vec(tmp_path):
    p = tmp_path / "x.clu"
    write_clu([0, 0, 1], p)
    assert p.read_bytes() == b"*Vertices 3\n0\n0\n1\n"
    assert read_clu(p) == [0, 0, 1]
    q = tmp_path / "x.vec"
    write_vec([2, 1], q)
    assert q.read_bytes() == b"*Vertices 2\n2\n1\n"
    assert read_vec(q) == [2, 1]
    write_vec([0.5, 2.25], q)
    assert read_vec(q) == [0.5, 2.25]


def test_clu_vec_length_mismatch(tmp_path):
    with pytest.raises(PajekValidationError):
        write_clu([0, 1], tmp_path / "x.clu", n_vertices=3)
    with pytest.raises(PajekValidationError):
        write_vec([1.0], tmp_path / "x.vec", n_vertices=2)
    assert not (tmp_path / "x.clu").exists()


@settings(max_examples=100)
@given(st.lists(st.integers(0, 10**6)), st.lists(st.floats(-1e9, 1e9, allow_nan=False)))
def test_clu_vec_round_trip(tmp_path_factory, part, vec):
    d = tmp_path_factory.mktemp("cv")
    write_clu(part, d / "p.clu")
    write_vec(vec, d / "v.vec")
    assert read_clu(d / "p.clu") == part
    assert read_vec(d / "v.vec") == vec


def test_network_conversions():
    bn = graph.build_bipartite([("1", "A"), ("1", "A"), ("1", "B"), ("2", "B")])
    doc = pajek.from_bipartite(bn)
    assert doc.edges == [(1, 3, 2), (1, 4, 1), (2, 4, 1)]
    assert pajek.to_bipartite(read_net(format_net(doc).encode())) == bn
    net = graph.project_columns(bn)
    assert pajek.to_one_mode(read_net(format_net(pajek.from_one_mode(net)).encode())) == net


def test_cp1252_encoding(tmp_path):
    doc = PajekDocument(ONE_MODE, ["Zürich"])
    p = tmp_path / "z.net"
    write_net(doc, p, encoding="cp1252")
    assert "Zürich".encode("cp1252") in p.read_bytes()
    assert read_net(p, encoding="cp1252").labels == ["Zürich"]
