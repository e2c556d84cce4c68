import pytest

from psl2ham import CosetAction, Field, PSL2, build_graph, build_quotient

INSTANCE_KS = {61: (61, 1), 81: (3, 4), 121: (11, 2)}


@pytest.fixture(scope="session")
def fields():
    return {k: Field(s, m) for k, (s, m) in INSTANCE_KS.items()}


@pytest.fixture(scope="session")
def field61(fields):
    return fields[61]


@pytest.fixture(scope="session")
def field81(fields):
    return fields[81]


@pytest.fixture(scope="session")
def field121(fields):
    return fields[121]


@pytest.fixture(scope="session")
def groups(fields):
    return {k: PSL2(f) for k, f in fields.items()}


@pytest.fixture(scope="session")
def actions(fields, groups):
    return {k: CosetAction(fields[k], groups[k]) for k in fields}


@pytest.fixture(scope="session")
def group61(groups):
    return groups[61]


@pytest.fixture(scope="session")
def action61(actions):
    return actions[61]


class GraphCache:
    """Builds and memoizes orbital graphs and quotients across the session."""

    def __init__(self, actions):
        self.actions = actions
        self._graphs = {}
        self._quotients = {}

    def graph(self, k, i):
        if (k, i) not in self._graphs:
            self._graphs[(k, i)] = build_graph(self.actions[k], i)
        return self._graphs[(k, i)]

    def quotient(self, k, i):
        if (k, i) not in self._quotients:
            self._quotients[(k, i)] = build_quotient(
                self.graph(k, i), self.actions[k].s_orbits)
        return self._quotients[(k, i)]


@pytest.fixture(scope="session")
def cache(actions):
    return GraphCache(actions)
