import random

import pytest

from spectral_turan import (
    Complete,
    CompleteBipartite,
    EmptyGraph,
    Graph,
    Graph6DecodeError,
    Path,
    Star,
    build_family,
    decode_graph6,
    encode_graph6,
)

KNOWN = [
    (EmptyGraph(0), b"?"),
    (EmptyGraph(1), b"@"),
    (EmptyGraph(2), b"A?"),
    (Path(2), b"A_"),
    (Path(3), b"Bg"),
    (Complete(3), b"Bw"),
    (Complete(4), b"C~"),
    (Star(4), b"Cs"),
]


@pytest.mark.parametrize("desc,expected", KNOWN)
def test_known_encodings(desc, expected):
    assert encode_graph6(build_family(desc)) == expected


@pytest.mark.parametrize("desc,expected", KNOWN)
def test_known_decodings(desc, expected):
    assert decode_graph6(expected).adj == build_family(desc).adj


def test_decode_accepts_text():
    assert decode_graph6("C~").edge_count() == 6


def test_round_trip_random_graphs():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(0, 20)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
        ]
        g = Graph.from_edges(n, edges)
        assert decode_graph6(encode_graph6(g)).adj == g.adj


def test_long_order_field():
    g = build_family(CompleteBipartite(60, 40))
    enc = encode_graph6(g)
    assert enc.startswith(b"~")
    back = decode_graph6(enc)
    assert back.n == 100 and back.adj == g.adj


def test_boundary_orders():
    # 62 fits the short form, 63 requires the long one
    for n in (62, 63):
        g = build_family(Path(n))
        assert decode_graph6(encode_graph6(g)).adj == g.adj
    assert not encode_graph6(build_family(Path(62))).startswith(b"~")
    assert encode_graph6(build_family(Path(63))).startswith(b"~")


@pytest.mark.parametrize(
    "data",
    [
        b"",
        b"B",  # missing adjacency bytes
        b"Bww",  # trailing bytes
        b"B" + bytes([30]),  # byte below the graph6 range
        b"B" + bytes([127]),  # byte above the graph6 range
        b"~~",  # 8-byte order escape, unsupported
        b"~?",  # truncated long order field
        b"~??B" + b"?" * 100,  # long form for an order the short form covers
        b"Bx",  # padding bit set after a 3-vertex body
    ],
)
def test_decode_rejects_malformed(data):
    with pytest.raises(Graph6DecodeError):
        decode_graph6(data)


def test_decode_error_carries_position():
    with pytest.raises(Graph6DecodeError) as exc:
        decode_graph6(b"")
    assert "empty" in str(exc.value)
