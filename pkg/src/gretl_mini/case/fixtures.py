"""Example programs for the state machine extraction, with expected results.

The expected states and transitions in each manifest were traced by hand
from the program listed in the fixture's docstring, before the engine
existed.  ``trigger_case`` records which of the four trigger rules applies:
``method`` (a method other than run), ``switch`` (enum constant of the
enclosing case), ``catch`` (caught exception type) or ``default`` ("--").
"""

import json
from dataclasses import dataclass
from pathlib import Path

from ..graph import Graph
from ..interchange import dumps_graph
from ..schema import Schema
from .javamodel import ProgramBuilder

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_DIR = DATA_DIR / "fixtures"
NEGATIVE_DIR = DATA_DIR / "negative"
REFERENCE_TRANSFORMATION = DATA_DIR / "ExtractStateMachines.gretl"


def reference_transformation():
    """Text of the bundled state machine extraction."""
    return REFERENCE_TRANSFORMATION.read_text(encoding="utf-8")


def _base_state(b, extra_methods=()):
    b.java_class("State", abstract=True)
    for m in ("activate", "send", "run", *extra_methods):
        b.method("State", m)


def fixture_a():
    """Turnstile.

    abstract class State { void activate(); void send(Output o); abstract void run(); void poll(); }
    enum Event { COIN, PUSH }   enum Output { UNLOCK, ALARM }   class Exception {}
    class Locked extends State {
      static Locked Instance();
      void run() {
        switch (e) { case COIN: send(Output.UNLOCK); Unlocked.Instance().activate(); }
        try { poll(); } catch (Exception ex) { Locked.Instance().activate(); }
      }
    }
    class Unlocked extends State {
      static Unlocked Instance();
      void run() { switch (e) { case PUSH: Locked.Instance().activate(); } }
      void timeout() { Locked.Instance().activate(); }
    }
    """
    b = ProgramBuilder("A")
    _base_state(b, ["poll"])
    b.enumeration("Event", ["COIN", "PUSH"])
    b.enumeration("Output", ["UNLOCK", "ALARM"])
    b.java_class("Exception")
    b.state_class("Locked")
    b.state_class("Unlocked")

    run = b.method("Locked", "run")
    coin = b.case(b.switch(run), "COIN")
    b.send(coin, "UNLOCK")
    b.activate(coin, "Unlocked")
    try_ = b.try_block(run)
    b.call(try_, "State", "poll")
    b.activate(b.catch(try_, "Exception"), "Locked")

    run = b.method("Unlocked", "run")
    b.activate(b.case(b.switch(run), "PUSH"), "Locked")
    b.activate(b.method("Unlocked", "timeout"), "Locked")
    return b.graph


def fixture_b():
    """Indirect subclassing through an abstract intermediate class.

    abstract class State { void activate(); void send(Output o); abstract void run(); void log(); }
    enum Output { BEEP, GO }   enum Command { RESUME, HALT }
    abstract class Active extends State {}
    class Idle extends State {
      static Idle Instance();
      void start() { send(Output.BEEP); Running.Instance().activate(); }
      void run() {}
    }
    class Running extends Active { static Running Instance(); void run() { Paused.Instance().activate(); } }
    class Paused extends Active {
      static Paused Instance();
      void run() {
        if (...) { send(Output.GO); Idle.Instance().activate(); }
        switch (c) { case RESUME: Running.Instance().activate(); case HALT: log(); }
      }
    }
    class Turbo extends Running { static Turbo Instance(); }
    class Helper { void kick() { Idle.Instance().activate(); } }
    """
    b = ProgramBuilder("B")
    _base_state(b, ["log"])
    b.enumeration("Output", ["BEEP", "GO"])
    b.enumeration("Command", ["RESUME", "HALT"])
    b.state_class("Active", abstract=True)
    b.state_class("Idle")
    b.state_class("Running", extends="Active")
    b.state_class("Paused", extends="Active")
    b.state_class("Turbo", extends="Running")
    b.java_class("Helper")

    start = b.method("Idle", "start")
    b.send(start, "BEEP")
    b.activate(start, "Running")
    b.method("Idle", "run")

    b.activate(b.method("Running", "run"), "Paused")

    run = b.method("Paused", "run")
    block = b.if_block(run)
    b.send(block, "GO")
    b.activate(block, "Idle")
    switch = b.switch(run)
    b.activate(b.case(switch, "RESUME"), "Running")
    b.call(b.case(switch, "HALT"), "State", "log")

    b.activate(b.method("Helper", "kick"), "Idle")
    return b.graph


def fixture_c():
    """State hierarchy without any state activation.

    abstract class State { void activate(); abstract void run(); }
    class Alpha extends State { static Alpha Instance(); void run() { helper(); } void helper(); }
    class Beta extends State { static Beta Instance(); void run() {} }
    abstract class Gamma extends State {}
    """
    b = ProgramBuilder("C")
    b.java_class("State", abstract=True)
    b.method("State", "activate")
    b.method("State", "run")
    b.state_class("Alpha")
    b.state_class("Beta")
    b.state_class("Gamma", abstract=True)
    run = b.method("Alpha", "run")
    b.method("Alpha", "helper")
    b.call(run, "Alpha", "helper")
    b.method("Beta", "run")
    return b.graph


def fixture_duplicate_state():
    """Two classes named State: the uniqueness assumption fails."""
    b = ProgramBuilder("DuplicateState")
    b.java_class("State", abstract=True)
    b.method("State", "activate")
    other = b.graph.create_vertex("classifiers.Class", "Class_State_2")
    other.set("name", "State")
    b.state_class("Only")
    return b.graph


def _t(src, dst, trigger, trigger_case, action="--"):
    return {"src": src, "dst": dst, "trigger": trigger, "trigger_case": trigger_case, "action": action}


MANIFESTS = {
    "A": {
        "fixture": "A",
        "description": "turnstile: switch, catch, non-run method triggers; one send() action",
        "states": ["Locked", "Unlocked"],
        "transitions": [
            _t("Locked", "Unlocked", "COIN", "switch", "UNLOCK"),
            _t("Locked", "Locked", "Exception", "catch"),
            _t("Unlocked", "Locked", "PUSH", "switch"),
            _t("Unlocked", "Locked", "timeout", "method"),
        ],
        "vertex_count": 60,
        "edge_count": 75,
    },
    "B": {
        "fixture": "B",
        "description": "indirect State subclasses behind an abstract intermediate; default triggers",
        "states": ["Idle", "Paused", "Running", "Turbo"],
        "transitions": [
            _t("Idle", "Running", "start", "method", "BEEP"),
            _t("Running", "Paused", "--", "default"),
            _t("Paused", "Idle", "--", "default", "GO"),
            _t("Paused", "Running", "RESUME", "switch"),
        ],
        "vertex_count": 80,
        "edge_count": 100,
    },
    "C": {
        "fixture": "C",
        "description": "state hierarchy without transitions",
        "states": ["Alpha", "Beta"],
        "transitions": [],
        "vertex_count": 23,
        "edge_count": 23,
    },
}

BUILDERS = {"A": fixture_a, "B": fixture_b, "C": fixture_c}


@dataclass
class Fixture:
    name: str
    source: Graph
    manifest: dict


def build_fixtures():
    """The positive fixtures, freshly built, with their manifests."""
    return [Fixture(name, BUILDERS[name](), dict(MANIFESTS[name])) for name in sorted(BUILDERS)]


def golden_graph(manifest):
    """Expected extraction result, built from the manifest alone."""
    schema = Schema("Target")
    state = schema.add_vertex_class("State")
    schema.add_attribute(state, "name", "String")
    trans = schema.add_edge_class("Transition", state, state, "src", "dst")
    schema.add_attribute(trans, "trigger", "String", "--")
    schema.add_attribute(trans, "action", "String", "--")
    graph = Graph(schema, "Target")
    states = {}
    for name in manifest["states"]:
        states[name] = graph.create_vertex(state)
        states[name].set("name", name)
    for t in manifest["transitions"]:
        e = graph.create_edge(trans, states[t["src"]], states[t["dst"]])
        e.set("trigger", t["trigger"])
        e.set("action", t["action"])
    return graph


def _dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_fixtures(directory=FIXTURE_DIR, negative_directory=NEGATIVE_DIR):
    """(Re)generate the fixture, golden and manifest files."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for fx in build_fixtures():
        manifest = dict(fx.manifest, source=f"{fx.name}.graph", golden=f"{fx.name}.golden.graph")
        (directory / manifest["source"]).write_text(dumps_graph(fx.source), encoding="utf-8")
        (directory / manifest["golden"]).write_text(dumps_graph(golden_graph(manifest)), encoding="utf-8")
        (directory / f"{fx.name}.manifest.json").write_text(_dump_json(manifest), encoding="utf-8")
    negative_directory = Path(negative_directory)
    negative_directory.mkdir(parents=True, exist_ok=True)
    (negative_directory / "DuplicateState.graph").write_text(
        dumps_graph(fixture_duplicate_state()), encoding="utf-8")


def manifest_paths(directory=FIXTURE_DIR):
    return sorted(Path(directory).glob("*.manifest.json"))


def load_manifest(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
