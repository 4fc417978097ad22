# Copyright 2026 The Petrifold Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Validates CLI and service output against the JSON schemas in schema/."""

import json
import pathlib
import subprocess
import sys
import tempfile
import urllib.request

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
data = root / "data"
schemas = {
    p.name.removesuffix(".schema.json"): json.loads(p.read_text())
    for p in (root / "schema").glob("*.schema.json")
}
failures = 0


def check(kind, doc, what):
    global failures
    try:
        jsonschema.validate(doc, schemas[kind])
        print(f"ok   {kind:12} {what}")
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL {kind:12} {what}: {e.message} at {list(e.absolute_path)}")


def run(*args):
    out = subprocess.run([cli, *map(str, args)], check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def scratch(directory, name, doc):
    path = pathlib.Path(directory) / name
    path.write_text(json.dumps(doc))
    return path


with tempfile.TemporaryDirectory() as tmp:
    relay = json.loads((data / "relay.net.json").read_text())
    check("net", relay, "relay.net.json")
    check("net", run("parse", data / "relay.numlist"), "parse")
    presentation = run("fold", data / "relay.net.json")
    check("presentation", presentation, "fold")
    check("net", run("unfold", scratch(tmp, "p.json", presentation)), "unfold")
    for f in ("collapse_f.json", "collapse_g.json"):
        check("net-morphism", json.loads((data / f).read_text()), f)
    f = scratch(tmp, "f.json", run("lift", data / "collapse_f.json"))
    g = scratch(tmp, "g.json", run("lift", data / "collapse_g.json"))
    check("functor", json.loads(f.read_text()), "lift")
    check("functor", run("compose", f, g), "compose")
    check("functor", run("tweak", g, "--gen", "tM", "--pre", "1,0"), "tweak")
    check("net-morphism", run("unfoldf", f), "unfoldf")
    fired = run("fire", data / "relay.net.json", "--marking", "1,1,2,0", "--seq", "t,v,u")
    check("term", fired["history"], "fire history")
    check("assignment", json.loads((data / "relay.assignment.json").read_text()), "relay.assignment.json")

    server = subprocess.Popen([cli, "serve", "--port", "0"], stdout=subprocess.PIPE, text=True)
    try:
        base = server.stdout.readline().split()[-1]

        def call(method, path, body=None):
            request = urllib.request.Request(
                base + path, method=method,
                data=None if body is None else json.dumps(body).encode(),
                headers={"Content-Type": "application/json"})
            with urllib.request.urlopen(request, timeout=10) as response:
                return json.loads(response.read())

        state = call("POST", "/sessions", {"net": relay, "marking": {"p1": 1, "p2": 1, "p3": 2}})
        sid = state["id"]
        check("term", state["history"], "session history")
        call("POST", f"/sessions/{sid}/fire", {"transition": "t"})
        call("POST", f"/sessions/{sid}/fire", {"transition": "v", "tokenAssignment": [1]})
        check("diagram", call("GET", f"/sessions/{sid}/diagram"), "GET diagram")
        check("session", call("GET", f"/sessions/{sid}/snapshot"), "GET snapshot")
        symmetry = {"source": ["a", "a"], "perm": [1, 0]}
        check("symmetry", symmetry, "swap")
        assert call("POST", "/api/swap-free", {"symmetry": symmetry})["swapFree"] is False
    finally:
        server.terminate()
        server.wait(timeout=10)

print("schema check:", "FAIL" if failures else "PASS")
sys.exit(1 if failures else 0)
