import pytest
from hypothesis import given, settings

from inhnet.diagram import (
    NEG,
    POS,
    Arrow,
    GeneralizedPath,
    PotentialPath,
    build_diagram,
    concatenate,
    degree,
    generalized_paths,
    path,
    potential_paths,
)
from inhnet.errors import (
    CycleError,
    DuplicateArrowError,
    EndpointMismatchError,
    HardContradictionError,
    ResourceLimitError,
    SelfLoopError,
    UnknownNodeError,
)

import oracles
from conftest import dags
from util import pp, texts

TWEETY = [Arrow("a", "b"), Arrow("b", "d"), Arrow("a", "c"), Arrow("c", "b"), Arrow("c", "d", NEG)]


def test_tweety_builds():
    d = build_diagram(TWEETY)
    assert d.nodes == ("a", "b", "c", "d")
    assert len(d.arrows) == 5
    assert d.arrow("c", "d").polarity is NEG


def test_empty_diagram():
    d = build_diagram([])
    assert d.nodes == () and not d.arrows
    assert d.degrees == {}


def test_two_cycle_rejected():
    with pytest.raises(CycleError):
        build_diagram([Arrow("a", "b"), Arrow("b", "a")])


def test_hard_contradiction_rejected():
    with pytest.raises(HardContradictionError):
        build_diagram([Arrow("c", "d"), Arrow("c", "d", NEG)])


def test_duplicate_and_self_loop():
    with pytest.raises(DuplicateArrowError):
        build_diagram([Arrow("a", "b"), Arrow("a", "b")])
    with pytest.raises(SelfLoopError):
        Arrow("a", "a")


def test_generalized_paths_tweety(tweety):
    got = generalized_paths(tweety, "a", "d")
    assert texts(got) == ["a -> b -> d", "a -> c -> b -> d", "a -> c !> d"]


def test_generalized_paths_nixon(nixon):
    assert texts(generalized_paths(nixon, "a", "d")) == ["a -> b -> d", "a -> c !> d"]


def test_no_path_to_self(tweety):
    for x in tweety.nodes:
        assert generalized_paths(tweety, x, x) == []


def test_unknown_node(tweety):
    with pytest.raises(UnknownNodeError):
        generalized_paths(tweety, "a", "zz")
    with pytest.raises(UnknownNodeError):
        degree(tweety, "zz", "a")


def test_potential_paths_tweety(tweety):
    # six, not seven: the listed example names exactly these six
    got = potential_paths(tweety, "a")
    assert sorted(texts(got)) == sorted(
        ["a -> b", "a -> c", "a -> b -> d", "a -> c -> b", "a -> c !> d", "a -> c -> b -> d"]
    )


def test_potential_paths_small():
    d = build_diagram([Arrow("x", "y")])
    assert texts(potential_paths(d, "x")) == ["x -> y"]
    d = build_diagram([Arrow("x", "y", NEG), Arrow("y", "z")])
    assert texts(potential_paths(d, "x")) == ["x !> y"]


def test_path_cap():
    d = build_diagram([Arrow("a", "b"), Arrow("b", "c"), Arrow("a", "c")])
    with pytest.raises(ResourceLimitError):
        potential_paths(d, "a", cap=2)


def test_concatenate():
    ac, cb = path(Arrow("a", "c")), path(Arrow("c", "b"))
    assert str(concatenate(ac, cb)) == "a -> c -> b"
    assert str(concatenate(path(Arrow("a", "b")), path(Arrow("b", "d")))) == "a -> b -> d"
    with pytest.raises(EndpointMismatchError):
        concatenate(path(Arrow("a", "b")), path(Arrow("c", "d")))


def test_concatenate_past_negative_is_generalized():
    p = concatenate(path(Arrow("a", "b", NEG)), path(Arrow("b", "c")))
    assert isinstance(p, GeneralizedPath) and not isinstance(p, PotentialPath)
    with pytest.raises(ValueError):
        PotentialPath(p.arrows)


def test_degree(tweety, nixon):
    assert degree(tweety, "a", "d") == 3
    assert degree(nixon, "a", "d") == 2
    assert degree(build_diagram([Arrow("x", "y")]), "x", "y") == 1
    assert degree(nixon, "b", "c") is None


def test_path_prefixes():
    p = pp("a -> c -> b -> d")
    assert str(p.prefix) == "a -> c -> b"
    assert texts(p.initial_segments) == ["a -> c", "a -> c -> b"]
    assert p.last_source == "b"
    assert pp("a -> b").prefix is None


@settings(max_examples=150, deadline=None)
@given(dags())
def test_enumeration_matches_brute_force(d):
    t = oracles.triples(d)
    for x in d.nodes:
        mine = {tuple((a.source, a.target, a.polarity.value) for a in p.arrows) for p in potential_paths(d, x)}
        assert mine == set(oracles.potential(t, x))
        for y in d.nodes:
            gen = {tuple((a.source, a.target, a.polarity.value) for a in p.arrows) for p in generalized_paths(d, x, y)}
            assert gen == set(oracles.generalized(t, x, y))
            assert degree(d, x, y) == oracles.degree(t, x, y)


@settings(max_examples=100, deadline=None)
@given(dags())
def test_positive_potential_paths_are_positive_generalized(d):
    for x in d.nodes:
        pos = {p.arrows for p in potential_paths(d, x) if all(a.polarity is POS for a in p.arrows)}
        gen = {p.arrows for y in d.nodes for p in generalized_paths(d, x, y) if all(a.polarity is POS for a in p.arrows)}
        assert pos == gen


@settings(max_examples=100, deadline=None)
@given(dags())
def test_degree_laws(d):
    for x in d.nodes:
        for p in potential_paths(d, x):
            for seg in p.initial_segments:
                assert degree(d, x, seg.endpoint) < degree(d, x, p.endpoint)
        for y in d.nodes:
            for z in d.nodes:
                left, right = degree(d, x, y), degree(d, y, z)
                if left is not None and right is not None:
                    assert degree(d, x, z) >= left + right


@settings(max_examples=100, deadline=None)
@given(dags())
def test_concatenate_associative(d):
    for x in d.nodes:
        for p in generalized_paths_all(d, x):
            if len(p.arrows) < 3:
                continue
            a, b, c = (GeneralizedPath(p.arrows[:1]), GeneralizedPath(p.arrows[1:2]), GeneralizedPath(p.arrows[2:]))
            assert concatenate(concatenate(a, b), c) == concatenate(a, concatenate(b, c)) == p


def generalized_paths_all(d, x):
    return [p for y in d.nodes for p in generalized_paths(d, x, y)]
