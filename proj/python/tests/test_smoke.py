# Copyright (c) sepwsts contributors.
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python module and the CLI binary."""

import json
import os
import subprocess

import pytest

import sepwsts

COUNTER_LEQ = {
    "dim": 1,
    "controls": ["p", "q"],
    "alphabet": ["a", "b"],
    "transitions": [
        {"src": "p", "letter": "a", "take": [0], "put": [1], "dst": "p"},
        {"src": "p", "letter": "b", "take": [1], "put": [0], "dst": "q"},
        {"src": "q", "letter": "b", "take": [1], "put": [0], "dst": "q"},
    ],
    "initial": [{"control": "p", "marking": [0]}],
    "finalBasis": [{"control": "p", "marking": [0]}, {"control": "q", "marking": [0]}],
}

BEXCESS_REV = {
    "dim": 1,
    "controls": ["s", "t"],
    "alphabet": ["a", "b"],
    "transitions": [
        {"src": "s", "letter": "b", "take": [0], "put": [1], "dst": "s"},
        {"src": "s", "letter": "a", "take": [1], "put": [0], "dst": "t"},
        {"src": "t", "letter": "a", "take": [1], "put": [0], "dst": "t"},
    ],
    "initial": [{"control": "s", "marking": [0]}],
    "finalBasis": [{"control": "s", "marking": [1]}, {"control": "t", "marking": [1]}],
}


def test_rado_tooling():
    assert sepwsts.rado_member("<<>>")
    assert sepwsts.rado_member("<<<>0")
    assert not sepwsts.rado_member("<<>00")
    assert sepwsts.rado_fragment(5, 2, 2)
    assert not sepwsts.rado_fragment(2, 1, 1)
    cert = sepwsts.rado_suffixes(1, 2)
    assert cert["valid"] and cert["u"] == ">>" and cert["v"] == ">0"
    assert sepwsts.rado_column_leq(3, 3)
    assert not sepwsts.rado_column_leq(1, 3)
    assert sepwsts.rado_k_member("<>#>")
    with pytest.raises(ValueError):
        sepwsts.rado_member("x")


def test_net_analyses():
    net = json.dumps(COUNTER_LEQ)
    assert sepwsts.membership(net, "aab")
    assert not sepwsts.membership(net, "abb")
    assert set(sepwsts.members_upto(net, 2)) == {"", "a", "aa", "ab"}

    cover = json.loads(sepwsts.karp_miller_cover(net))
    assert {e["control"] for e in cover} == {"p", "q"}
    assert all(e["vec"] == ["w"] for e in cover)

    bw = sepwsts.backward_covers(net, "q", [3])
    assert bw["covered"]
    verdict = sepwsts.check_invariant(net, sepwsts.karp_miller_cover(net))
    assert not verdict["ok"] and verdict["kind"] == "iiF"  # the language is nonempty


def test_separation_pipeline():
    net1, net2 = json.dumps(COUNTER_LEQ), json.dumps(BEXCESS_REV)
    out = sepwsts.separate(net1, net2)
    assert out["disjoint"]
    report = sepwsts.verify(net1, net2, out["separator"])
    assert report["inclusion_ok"] and report["disjoint_ok"]
    assert "digraph" in sepwsts.separator_dot(out["separator"])

    joint = sepwsts.separate(net1, net1)
    assert not joint["disjoint"]
    assert sepwsts.membership(net1, joint["witness"])


@pytest.fixture()
def cli():
    path = os.environ.get("SEPWSTS_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("SEPWSTS_CLI not set")
    return path


@pytest.fixture()
def data_dir():
    path = os.environ.get("SEPWSTS_DATA")
    if not path or not os.path.isdir(path):
        pytest.skip("SEPWSTS_DATA not set")
    return path


def run(args, **kw):
    return subprocess.run(args, capture_output=True, text=True, **kw)


def test_cli_rado(cli):
    r = run([cli, "rado", "member", "<<>>"])
    assert r.returncode == 0 and r.stdout.strip() == "true"
    r = run([cli, "rado", "member", "<<>00"])
    assert r.returncode == 0 and r.stdout.strip() == "false"
    r = run([cli, "rado", "suffixes", "1", "2"])
    assert r.returncode == 0 and "valid" in r.stdout
    r = run([cli, "rado", "fragment-check"])
    assert r.returncode == 0
    r = run([cli, "rado", "member", "xyz"])
    assert r.returncode == 2


def test_cli_separate_verify_roundtrip(cli, data_dir, tmp_path):
    out = tmp_path / "sep"
    net1 = os.path.join(data_dir, "counter_leq.json")
    net2 = os.path.join(data_dir, "bexcess_rev.json")
    r = run([cli, "separate", net1, net2, str(out)])
    assert r.returncode == 0
    assert (out / "separator.json").exists()
    assert (out / "separator.dot").exists()
    report = json.loads((out / "report.json").read_text())
    assert report["verdicts"]["disjoint"] is True

    r = run([cli, "verify", net1, net2, str(out / "separator.json")])
    assert r.returncode == 0

    out2 = tmp_path / "joint"
    r = run([cli, "separate", net1, net1, str(out2)])
    assert r.returncode == 10
    witness = json.loads((out2 / "report.json").read_text())["verdicts"]["witness"]
    assert isinstance(witness, list)

    r = run([cli, "separate", net1, "missing.json", str(tmp_path / "x")])
    assert r.returncode == 2


def test_cli_exit_codes_and_stability(cli, data_dir, tmp_path):
    net1 = os.path.join(data_dir, "one_a.json")
    nondet = os.path.join(data_dir, "nondet_second.json")
    r = run([cli, "separate", net1, nondet, str(tmp_path / "nd")])
    assert r.returncode == 3

    # identical inputs yield byte-identical artifacts
    even = os.path.join(data_dir, "parity_even.json")
    odd = os.path.join(data_dir, "parity_odd.json")
    out1, out2 = tmp_path / "s1", tmp_path / "s2"
    assert run([cli, "separate", even, odd, str(out1)]).returncode == 0
    assert run([cli, "separate", even, odd, str(out2)]).returncode == 0
    assert (out1 / "separator.json").read_bytes() == (out2 / "separator.json").read_bytes()
    assert (out1 / "separator.dot").read_bytes() == (out2 / "separator.dot").read_bytes()

    # SEPWSTS_BOUND steers the default bound
    env = dict(os.environ, SEPWSTS_BOUND="8")
    out3 = tmp_path / "s3"
    assert run([cli, "separate", even, odd, str(out3)], env=env).returncode == 0
    report = json.loads((out3 / "report.json").read_text())
    assert report["verdicts"]["shadow"]["k"] == 8


def test_cli_km_covers_membership(cli, data_dir):
    net = os.path.join(data_dir, "counter_leq.json")
    r = run([cli, "km", net])
    assert r.returncode == 0
    cover = json.loads(r.stdout)
    assert {e["control"] for e in cover} == {"p", "q"}

    r = run([cli, "covers", net, "q", "2"])
    assert r.returncode == 0 and json.loads(r.stdout)["covered"] is True

    r = run([cli, "membership", net, "aab"])
    assert r.returncode == 0 and r.stdout.strip() == "true"

    olts = os.path.join(data_dir, "olts_a_or_ab.json")
    r = run([cli, "det", olts])
    assert r.returncode == 0
    det = json.loads(r.stdout)
    assert det["direction"] == "upward" and len(det["initial"]) == 1
