import random

import networkx as nx
import pytest

from hilprank.network import Bus, Line, build_network
from hilprank.scenario import load_bundled

ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def bundled():
    return load_bundled()


@pytest.fixture(scope="session")
def feeder1():
    """Feeder 1 of the case study on its own: 34 buses, 33 lines."""
    return load_bundled(feeders=(1,))


def random_tree_parts(rng: random.Random, n_lines: int, n_feeders: int = 1, slack: int = 1):
    """Buses and lines of a random radial network with shuffled ids and orientations."""
    bus_ids = rng.sample(range(2, 10 * n_lines + 10), n_lines)
    line_ids = rng.sample(range(1, 10 * n_lines + 10), n_lines)
    buses = [Bus(slack)] + [Bus(b, rng.uniform(0, 500), rng.uniform(0.1, 1.0), rng.choice([0, 1000, 3200]))
                            for b in bus_ids]
    attached = [slack]
    feeder_of = {slack: None}
    lines = []
    for k, (b, lid) in enumerate(zip(bus_ids, line_ids)):
        parent = slack if k < n_feeders else rng.choice(attached)
        feeder = f"F{k}" if parent == slack else feeder_of[parent]
        feeder_of[b] = feeder
        ends = (parent, b) if rng.random() < 0.7 else (b, parent)
        lines.append(Line(lid, ends[0], ends[1], feeder, {1: rng.randint(1, 5), 2: rng.randint(0, 3)},
                          round(rng.uniform(0, 1), 2)))
        attached.append(b)
    rng.shuffle(lines)
    rng.shuffle(buses)
    return buses, lines, slack


def random_network(seed: int, n_lines: int, n_feeders: int = 1):
    rng = random.Random(seed)
    return build_network(*random_tree_parts(rng, n_lines, n_feeders))


def brute_downstream(net, line_id):
    """Lines cut off from the slack bus once ``line_id`` is deleted, via plain reachability."""
    g = nx.MultiGraph()
    g.add_nodes_from(net.buses)
    for lid, line in net.lines.items():
        if lid != line_id:
            g.add_edge(line.from_bus, line.to_bus, key=lid)
    energised = nx.node_connected_component(g, net.slack_bus)
    return {lid for lid, line in net.lines.items()
            if lid != line_id and line.from_bus not in energised and line.to_bus not in energised}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
