import json
import subprocess
import sys

import pytest

from siltlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_braid_nf_identity(capsys):
    code, out, _ = run(capsys, "braid-nf", "b1 b2 b1 B2 B1 B2", "--diagram", "a2")
    assert code == 0 and out.strip() == "identity"


def test_ctilt_lists_five(capsys):
    code, out, _ = run(capsys, "ctilt", "--quiver", "a2", "--functor", "nu2")
    assert code == 0
    assert len([line for line in out.splitlines() if line.startswith("  ")]) == 5
    code, out, _ = run(capsys, "ctilt", "--quiver", "a2", "--functor", "nu2", "--json")
    data = json.loads(out)
    assert data["ind_count"] == 5 and len(data["ctilt"]) == 5


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "a2-classification")
    assert code == 0 and out.splitlines()[-1].startswith("PASS")
    code, out, _ = run(capsys, "verify", "folded-a2", "--d", "3", "--json")
    claim = json.loads(out)["claims"][0]
    assert claim["witness"]["ind_count"] == 10 and claim["witness"]["ctilt"] == 10


def test_mutate_and_hasse(capsys):
    assert run(capsys, "mutate", "--object", "1 2", "--at", "2", "--direction", "left")[1].strip() == "1 + 5"
    code, out, _ = run(capsys, "hasse", "--quiver", "a2", "--n", "2", "--dot")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 16
    code, out, _ = run(capsys, "silt-interval", "--quiver", "a3:FB", "--n", "1", "--json")
    assert len(json.loads(out)["silting"]) == 14


def test_other_commands(capsys):
    code, out, _ = run(capsys, "ar-quiver", "--quiver", "a3", "--dot")
    assert code == 0 and "digraph" in out
    code, out, _ = run(capsys, "braid-encode", "--quiver", "a2", "--section", "1,0", "--depth", "3")
    assert code == 0 and out.splitlines()[0] == "D^0 | 213"
    code, out, _ = run(capsys, "d-silting", "--quiver", "a2", "--d", "2", "--labels", "0", "6")
    assert code == 0 and out.startswith("9 2-silting")
    code, out, _ = run(capsys, "amiot-check", "--quiver", "a3", "--d", "2")
    assert code == 0 and "bijection holds" in out


@pytest.mark.parametrize("argv,needle", [
    (["ar-quiver", "--quiver", "b3"], "malformed quiver spec"),
    (["braid-encode", "--section", "9,9", "--depth", "2"], "unreachable at depth"),
    (["mutate", "--object", "1 4", "--at", "1"], "not silting"),
    (["verify", "no-such-suite"], "unknown suite"),
    (["ctilt", "--functor", "nu1"], "d >= 2"),
])
def test_usage_errors(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2 and needle in err


def test_argparse_error_is_usage(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "hasse", "--dot", "--json")[0] == 2


def test_console_script_module():
    out = subprocess.run([sys.executable, "-m", "siltlab.cli", "braid-nf", "b1 B1"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "identity"
