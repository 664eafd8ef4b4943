import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csrange.errors import EmptyLinkSetError, InvalidExponentError, ZeroDistanceError
from csrange.geometry import (
    CrossDistances,
    DirectedLink,
    LinkSet,
    NodePosition,
    cross_distances,
    distance,
    linkset_from_json_dict,
    linkset_to_json_dict,
    load_topology,
    path_gain,
    save_topology,
)

coords = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


def link(tx_xy, rx_xy):
    return DirectedLink(NodePosition(*tx_xy), NodePosition(*rx_xy))


def test_distance_basic():
    assert distance(NodePosition(0, 0), NodePosition(3, 4)) == 5.0
    assert distance(NodePosition(2, 2), NodePosition(2, 2)) == 0.0


@given(ax=coords, ay=coords, bx=coords, by=coords)
def test_distance_symmetry(ax, ay, bx, by):
    a, b = NodePosition(ax, ay), NodePosition(bx, by)
    assert distance(a, b) == distance(b, a)


def test_node_position_rejects_non_finite():
    with pytest.raises(ValueError):
        NodePosition(float("nan"), 0.0)
    with pytest.raises(ValueError):
        NodePosition(0.0, float("inf"))


def test_path_gain_value():
    # d = 5, alpha = 3 -> 5^-3 = 0.008 exactly
    assert path_gain(NodePosition(0, 0), NodePosition(5, 0), 3.0) == 0.008


def test_path_gain_monotone_in_distance():
    a = NodePosition(0, 0)
    gains = [path_gain(a, NodePosition(d, 0), 4.0) for d in (0.5, 1.0, 2.0, 7.0)]
    assert all(g1 > g2 for g1, g2 in zip(gains, gains[1:]))


def test_path_gain_errors():
    a, b = NodePosition(0, 0), NodePosition(1, 0)
    with pytest.raises(InvalidExponentError):
        path_gain(a, b, 2.0)
    with pytest.raises(ZeroDistanceError):
        path_gain(a, NodePosition(0, 0), 4.0)


def test_directed_link_rejects_zero_length():
    with pytest.raises(ZeroDistanceError):
        link((1, 1), (1, 1))


def test_link_length():
    assert link((0, 0), (3, 4)).length == 5.0


def test_linkset_requires_links():
    with pytest.raises(EmptyLinkSetError):
        LinkSet(())


def test_linkset_order_and_max_length():
    ls = LinkSet((link((0, 0), (1, 0)), link((5, 5), (5, 8)), link((9, 9), (9, 9.5))))
    assert len(ls) == 3
    assert ls[1].length == 3.0
    assert [l.length for l in ls] == [1.0, 3.0, 0.5]
    assert ls.max_link_length() == 3.0


def test_cross_distances_example():
    li = link((0, 0), (1, 0))
    lj = link((10, 0), (11, 0))
    assert cross_distances(li, lj) == CrossDistances(10.0, 11.0, 9.0, 10.0)


@given(
    d_max=st.floats(min_value=0.1, max_value=50),
    k=st.floats(min_value=0.05, max_value=6),
    li_frac=st.floats(min_value=1e-3, max_value=1.0),
    lj_frac=st.floats(min_value=1e-3, max_value=1.0),
    sep_factor=st.floats(min_value=1.0, max_value=3.0),
    phi_i=st.floats(min_value=0.0, max_value=2 * math.pi),
    phi_j=st.floats(min_value=0.0, max_value=2 * math.pi),
)
@settings(max_examples=300, deadline=None)
def test_cross_distances_triangle_bound(d_max, k, li_frac, lj_frac, sep_factor, phi_i, phi_j):
    # Links no longer than d_max whose transmitters are >= (k+2)*d_max apart
    # keep all four endpoint separations at or above k*d_max.
    sep = (k + 2.0) * d_max * sep_factor
    ti = NodePosition(0.0, 0.0)
    tj = NodePosition(sep, 0.0)
    ri = NodePosition(li_frac * d_max * math.cos(phi_i), li_frac * d_max * math.sin(phi_i))
    rj = NodePosition(
        sep + lj_frac * d_max * math.cos(phi_j), lj_frac * d_max * math.sin(phi_j)
    )
    four = cross_distances(DirectedLink(ti, ri), DirectedLink(tj, rj))
    assert min(four) >= k * d_max - 1e-9


def test_topology_json_round_trip(tmp_path):
    ls = LinkSet((link((0, 0), (1, 2)), link((3.5, -1), (4, 0))))
    doc = linkset_to_json_dict(ls)
    assert doc == {
        "links": [
            {"tx": [0.0, 0.0], "rx": [1.0, 2.0]},
            {"tx": [3.5, -1.0], "rx": [4.0, 0.0]},
        ]
    }
    assert linkset_from_json_dict(doc) == ls

    path = tmp_path / "topo.json"
    save_topology(ls, str(path))
    assert load_topology(str(path)) == ls
    # file content uses the exact wire field names
    raw = json.loads(path.read_text())
    assert set(raw) == {"links"} and set(raw["links"][0]) == {"tx", "rx"}


@pytest.mark.parametrize(
    "doc",
    [
        {},
        {"links": "nope"},
        {"links": [{"tx": [0, 0]}]},
        {"links": [{"tx": [0], "rx": [1, 1]}]},
    ],
)
def test_topology_json_malformed(doc):
    with pytest.raises(ValueError):
        linkset_from_json_dict(doc)
