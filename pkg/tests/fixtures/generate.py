"""Regenerate the CLI fixture corpus: ``python tests/fixtures/generate.py``.

Writes instance documents under ``docs/`` (some deliberately non-canonical),
their canonical forms under ``golden/``, malformed inputs under ``bad/`` and
``cases.json`` listing argv, expected exit status and expected stdout.
"""
import json
import shutil
import sys
from pathlib import Path

from polycal import formats
from polycal.cli import main
from polycal.harness import gen_instance

HERE = Path(__file__).resolve().parent

HAND = {
    "halfline": '{"type":"hpoly","dim":1,"ineq":[{"a":["1"],"b":"1"}],"eq":[]}',
    "unnormalised": '{"type":"hpoly","dim":1,"ineq":[{"a":["2/4"],"b":"-6/3"}],"eq":[]}',
    "reordered": '{"eq":[{"d":"0","c":["1","-1"]}], "dim":2,\n  "ineq":[], "type":"hpoly"}',
    "box": ('{"type":"hpoly","dim":2,"ineq":[{"a":["1","0"],"b":"1"},{"a":["-1","0"],"b":"0"},'
            '{"a":["0","1"],"b":"1"},{"a":["0","-1"],"b":"0"}],"eq":[]}'),
    "flat": ('{"type":"hpoly","dim":2,"ineq":[{"a":["1","0"],"b":"1"},{"a":["-1","0"],"b":"0"}],'
             '"eq":[{"c":["0","1"],"d":"0"}]}'),
    "far": '{"type":"hpoly","dim":2,"ineq":[{"a":["-1","0"],"b":"-5"}],"eq":[]}',
    "abs": '{"type":"maxaffine","n":1,"pieces":[{"a":["1"],"b":"0"},{"a":["-1"],"b":"0"}]}',
    "zero_halfline": ('{"type":"maxaffine","n":1,"pieces":[{"a":["0"],"b":"0"}],'
                      '"dom":{"dim":1,"ineq":[{"a":["-1"],"b":"0"}]}}'),
    "hinge": '{"type":"maxaffine","n":1,"pieces":[{"a":["1"],"b":"0"},{"a":["0"],"b":"0"}]}',
    "shift_up": '{"type":"svmap","n":1,"m":1,"graph":{"dim":2,"ineq":[{"a":["1","-1"],"b":"0"}]}}',
    "double": '{"type":"svmap","n":1,"m":1,"graph":{"type":"hpoly","dim":2,"eq":[{"c":["-2","1"],"d":"0"}]}}',
    "check_sum": json.dumps({"type": "check", "theorem": "sum_rule", "instances": [
        {"type": "svmap", "n": 1, "m": 1, "graph": {"dim": 2, "ineq": [{"a": ["1", "-1"], "b": "0"}]}},
        {"type": "svmap", "n": 1, "m": 1, "graph": {"dim": 2, "ineq": [{"a": ["-1", "-1"], "b": "0"}]}}],
        "points": [["0", "0"]], "params": {"vs": [["1"], ["0"], ["3/2"]]}}),
    "check_chain": json.dumps({"type": "check", "theorem": "CHAIN_RULE", "instances": [
        {"type": "svmap", "n": 2, "m": 2, "graph": {"dim": 4, "eq": [
            {"c": ["-1", "-2", "1", "0"], "d": "0"}, {"c": ["0", "-1", "0", "1"], "d": "0"}]}},
        {"type": "svmap", "n": 2, "m": 1, "graph": {"dim": 3, "eq": [{"c": ["-3", "1", "1"], "d": "0"}]}}],
        "points": [["1", "1", "8"]], "params": {"ws": [["2"], ["-1"], ["1/3"]]}}),
    "check_sublevel": json.dumps({"type": "check", "theorem": "sublevel-nc", "instances": [
        {"type": "maxaffine", "n": 1, "pieces": [{"a": ["1"], "b": "0"}, {"a": ["-1"], "b": "0"}]}],
        "points": [["1"]], "params": {"level": "1"}}),
}

BAD = {
    "syntax": '{"type":"hpoly",\n "dim":1,,}',
    "zero_den": '{"type":"hpoly","dim":1,"ineq":[{"a":["1"],"b":"1/0"}],"eq":[]}',
    "unknown_field": '{"type":"hpoly","dim":1,"ineq":[],"eq":[],"colour":"red"}',
    "float": '{"type":"hpoly","dim":1,"ineq":[{"a":[1.5],"b":"1"}],"eq":[]}',
    "wrong_len": '{"type":"hpoly","dim":2,"ineq":[{"a":["1"],"b":"1"}],"eq":[]}',
    "bad_type": '{"type":"polygon","dim":1}',
    "empty_dom": ('{"type":"maxaffine","n":1,"pieces":[{"a":["1"],"b":"0"}],'
                  '"dom":{"dim":1,"ineq":[{"a":["1"],"b":"0"},{"a":["-1"],"b":"-1"}]}}'),
    "not_utf8": None,
}


def write_docs():
    docs = HERE / "docs"
    for name, text in HAND.items():
        (docs / f"{name}.json").write_text(text + "\n")
    k = 0
    for kind, dims in (("polyhedron", (1,)), ("polyhedron", (2,)), ("polyhedron", (3,)),
                       ("function", (1,)), ("function", (2,)), ("svmap", (1, 1)), ("svmap", (2, 1)),
                       ("svmap", (1, 2))):
        for seed in range(5):
            obj = gen_instance(kind, dims, seed=seed)
            doc = formats.to_doc(obj)
            # store generated documents with indentation so canon has work to do
            (docs / f"gen{k:02d}_{kind}.json").write_text(json.dumps(doc, indent=1) + "\n")
            k += 1
    bad = HERE / "bad"
    for name, text in BAD.items():
        if text is None:
            (bad / f"{name}.json").write_bytes(b'{"type":"hpoly","dim":\xff}')
        else:
            (bad / f"{name}.json").write_text(text + "\n")


def run(argv):
    import contextlib
    import io
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv)
    return code, out.getvalue()


def write_golden_and_cases():
    golden = HERE / "golden"
    for p in sorted((HERE / "docs").glob("*.json")):
        code, out = run(["canon", str(p)])
        assert code == 0, p
        (golden / p.name).write_text(out)
    d = "tests/fixtures/docs/"
    argvs = [
        ["subdiff", d + "abs.json", "--point", "0"],
        ["subdiff", d + "abs.json", "--point", "1"],
        ["subdiff", d + "zero_halfline.json", "--point", "0"],
        ["ri-member", d + "box.json", "--point", "0,1/2"],
        ["ri-member", d + "box.json", "--point", "1/2,1/2"],
        ["ri-point", d + "box.json"],
        ["ri-point", d + "flat.json"],
        ["normal-cone", d + "box.json", "--point", "1,1"],
        ["separate", d + "box.json", d + "far.json"],
        ["separate", d + "box.json", d + "box.json"],
        ["separate", d + "flat.json", d + "box.json"],
        ["coderiv", d + "shift_up.json", "--at", "0,0", "--v", "1"],
        ["coderiv", d + "double.json", "--at", "1,2", "--v", "3"],
        ["optval", d + "shift_up.json", d + "hinge.json", "--at", "0"],
        ["optval", d + "shift_up.json", d + "hinge.json", "--at", "-2"],
        ["check", d + "check_sum.json"],
        ["check", d + "check_chain.json"],
        ["check", d + "check_sublevel.json"],
        ["check", "rockafellar", "--trials", "3", "--seed", "42"],
        ["check", "Sum_Rule", "--trials", "2", "--seed", "1", "--dims", "1,1"],
        ["check", "gem_ri", "--trials", "2", "--seed", "3", "--violated"],
        ["check", "sum_rule", "--trials", "2", "--seed", "1", "--corrupt"],
        ["check", d + "check_sum.json", "--corrupt"],
        ["gen", "polyhedron", "--seed", "1", "--dims", "2"],
        ["gen", "svmap", "--seed", "4", "--dims", "1,1"],
        ["gen", "pair", "--seed", "2", "--dims", "2", "--violated"],
        ["check", "NOT_A_THEOREM"],
        ["check", "rockafellar", "--dims", "4"],
        ["check", "rockafellar", "--trials", "0"],
        ["gen", "polyhedron", "--dims", "9"],
        ["ri-member", d + "box.json", "--point", "1/0,1"],
        ["ri-member", d + "box.json"],
        ["subdiff", d + "box.json", "--point", "0"],
        ["subdiff", d + "zero_halfline.json", "--point", "-1"],
        ["coderiv", d + "shift_up.json", "--at", "0,-1", "--v", "1"],
        ["ri-point", "tests/fixtures/missing.json"],
        ["frobnicate"],
        [],
    ]
    argvs += [["canon", f"tests/fixtures/bad/{name}.json"] for name in BAD]
    cases = []
    for argv in argvs:
        code, out = run(argv)
        cases.append({"argv": argv, "exit": code, "stdout": out})
    (HERE / "cases.json").write_text(json.dumps(cases, indent=1) + "\n")


if __name__ == "__main__":
    import os
    os.chdir(HERE.parent.parent)
    for sub in ("docs", "golden", "bad"):
        shutil.rmtree(HERE / sub, ignore_errors=True)
        (HERE / sub).mkdir()
    write_docs()
    write_golden_and_cases()
    print(f"{len(list((HERE / 'docs').glob('*.json')))} documents", file=sys.stderr)
