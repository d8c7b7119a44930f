import graphviz

from ..models import EMPTY, StateVector, Transition
from ..synthesis import Controller
from ..utils.common import EMPTY_NODE, join_labels

_START = "__start__"


def state_id(q: StateVector) -> str:
    return join_labels(q)


def edge_label(t: Transition) -> str:
    return f"({join_labels(t.label.tokens)}){t.modality.glyph}"


def to_graph(a: Controller, name: str = "msca") -> graphviz.Digraph:
    dot = graphviz.Digraph(name=name, graph_attr={"rankdir": "LR"})

    if a is EMPTY:
        dot.node(EMPTY_NODE, shape="plaintext")
        return dot

    dot.node(_START, label="", shape="point")
    for q in a.sorted_states():
        if q in a.finals:
            dot.node(state_id(q), shape="circle", peripheries="2")
        else:
            dot.node(state_id(q), shape="circle")
    dot.edge(_START, state_id(a.initial))

    for t in a.sorted_transitions():
        dot.edge(state_id(t.source), state_id(t.target), label=edge_label(t))
    return dot


def to_dot(a: Controller, name: str = "msca") -> str:
    """DOT text: doubled border on final states, an arrow from a point node into the initial state."""
    return to_graph(a, name=name).source
