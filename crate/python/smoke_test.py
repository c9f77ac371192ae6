"""Smoke test for the qspec extension module.

Build first:
    cargo build -p qspec-py --release --features extension-module
then run:
    python3 python/smoke_test.py [path/to/libqspec.so]
"""

import importlib.util
import json
import os
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def find_library():
    if len(sys.argv) > 1:
        return Path(sys.argv[1])
    if os.environ.get("QSPEC_LIB"):
        return Path(os.environ["QSPEC_LIB"])
    for profile in ("release", "debug"):
        for name in ("libqspec.so", "libqspec.dylib", "qspec.pyd"):
            p = ROOT / "target" / profile / name
            if p.exists():
                return p
    sys.exit("libqspec not found; build with cargo build -p qspec-py --features extension-module")


def load(path):
    spec = importlib.util.spec_from_file_location("qspec", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    qspec = load(find_library())

    assert qspec.parse_ring("Prod( Zmod(4) , Zmod(3) )") == "Prod(Zmod(4),Zmod(3))"
    assert len(qspec.check_names()) == 25

    r = qspec.Ring("Zmod(12)")
    assert r.size == 12 and len(r) == 12
    assert r.elements()[:3] == ["0", "1", "2"]

    sp = r.spectrum()
    assert [p["name"] for p in sp["points"]] == ["(4)", "(3)", "(2)"]
    assert [p["name"] for p in r.spectrum("prime")["points"]] == ["(3)", "(2)"]

    dot = r.dot()
    assert dot.count("[label=") == 3 and dot.count("->") == 1

    ideals = r.ideals()
    assert len(ideals) == 6
    assert sum(i["quasi_prime"] for i in ideals) == 3

    report = r.check(only=["thm:components"])
    assert report["schema"] == qspec.SCHEMA
    assert [(x["name"], x["status"]) for x in report["results"]] == [("thm:components", "pass")]

    six = qspec.Ring("Zmod(6)").check()
    assert all(x["status"] in ("pass", "inapplicable") for x in six["results"])

    eight = qspec.Ring("Zmod(8)").check()
    bad = [x for x in eight["results"] if x["status"] not in ("pass", "inapplicable")]
    assert bad and all(x["status"] == "fail (documented paper ambiguity)" for x in bad)

    # the binding and the CLI agree byte for byte when the binary is around
    text = qspec.Ring("Zmod(8)").report_json(parallel=False)
    assert json.loads(text) == eight
    cli = find_cli()
    if cli:
        out = subprocess.run([cli, "--ring", "Zmod(8)", "check"], capture_output=True, check=False)
        assert out.stdout.decode() == text

    for bad_expr in ("Zmod(1)", "Zmod(", "PolyQuot(Zmod(4),x,2*x^2+1)"):
        try:
            qspec.Ring(bad_expr)
        except ValueError:
            pass
        else:
            raise AssertionError(bad_expr)
    try:
        qspec.Ring("Zmod(64)", max_ideals=2).ideals()
    except qspec.CapExceeded:
        pass
    else:
        raise AssertionError("cap not raised")
    try:
        r.spectrum("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("bad kind accepted")

    print("smoke test ok:", qspec.__version__)


def find_cli():
    for profile in ("release", "debug"):
        p = ROOT / "target" / profile / "qspec"
        if p.exists():
            return str(p)
    return None


if __name__ == "__main__":
    main()
