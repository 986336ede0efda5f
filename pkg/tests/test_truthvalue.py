from hypothesis import given, settings

from inhnet.diagram import NEG, POS, Arrow, build_diagram
from inhnet.policy import Policy
from inhnet.truthvalue import TruthValueFact, decided_facts, derive, equivalence_report

from conftest import dags


def strs(facts):
    return sorted(map(str, facts))


def test_tweety_decided(tweety):
    decided = decided_facts(tweety)
    assert decided["a", "b"] == {POS}
    assert decided["a", "c"] == {POS}
    assert decided["c", "b"] == {POS}
    assert decided["b", "d"] == {POS}
    assert decided["c", "d"] == {NEG}
    assert decided["a", "d"] == {NEG}


def test_tweety_only_what_is_needed(tweety):
    facts = derive(tweety)
    assert TruthValueFact("a", "d", POS, "b") in facts
    assert TruthValueFact("a", "d", NEG, "c") in facts
    assert TruthValueFact("a", "d", POS, None) not in facts


def test_single_arrow():
    d = build_diagram([Arrow("x", "y")])
    assert strs(derive(d)) == ["x ⇒ y", "x ⇒_x y"]


def test_nixon(nixon):
    facts = derive(nixon)
    assert TruthValueFact("a", "d", POS, "b") in facts
    assert TruthValueFact("a", "d", NEG, "c") in facts
    assert ("a", "d") not in decided_facts(nixon)


def test_equivalence_on_corpus(nets):
    for policy in Policy:
        for name, d in nets.items():
            assert equivalence_report(d, policy) == [], name


def test_no_composite_chaining(nets):
    # a => c is decided in the concatenation net, but c's strength only comes from direct info at c
    facts = derive(nets["concat"])
    for f in facts:
        if f.strength is not None and f.strength != f.subject:
            assert nets["concat"].arrow(f.strength, f.object) is not None


@settings(max_examples=150, deadline=None)
@given(dags())
def test_decided_has_support(d):
    facts = derive(d)
    for f in facts:
        if f.decided:
            assert any(g.subject == f.subject and g.object == f.object and g.sign is f.sign and not g.decided
                       for g in facts)


@settings(max_examples=150, deadline=None)
@given(dags())
def test_equivalence_random(d):
    assert equivalence_report(d) == []
    assert equivalence_report(d, Policy.P21) == []
