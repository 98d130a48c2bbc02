import json
import os
import subprocess
import sys

import pydot
import pytest

from aspic import kernels
from aspic.classical import build_classical_csaf
from aspic.serialize import dumps, saf_to_dict, to_dot

from fixtures import example1_saf


def test_saf_dict_shape():
    saf = example1_saf("last", "eli")
    d = saf_to_dict(saf)
    assert set(d) == {"mode", "ordering", "arguments", "attacks", "defeats", "attack_counts", "metadata"}
    assert len(d["arguments"]) == 8 and len(d["attacks"]) == 5 and len(d["defeats"]) == 1
    ids = {a["id"] for a in d["arguments"]}
    for at in d["attacks"]:
        assert {at["attacker"], at["target"], at["on"]} <= ids
    assert json.loads(dumps(d)) == json.loads(json.dumps(d))


def test_dumps_is_stable():
    a = dumps(saf_to_dict(example1_saf("weakest", "dem", transpose=True)))
    b = dumps(saf_to_dict(example1_saf("weakest", "dem", transpose=True)))
    assert a == b and a.endswith("\n")


def test_classical_dict_and_dot():
    saf = build_classical_csaf(["x", "-y", "x > y"], [["x"], ["-y", "x > y"]])
    d = saf_to_dict(saf)
    assert d["mode"] == "c-saf" and all("support" in a for a in d["arguments"])
    (graph,) = pydot.graph_from_dot_data(to_dot(saf))
    assert graph.get_edges()


def test_dot_quotes_labels():
    saf = example1_saf()
    text = to_dot(saf, "defeats", name="g")
    (graph,) = pydot.graph_from_dot_data(text)
    labels = {n.get("label") for n in graph.get_nodes() if n.get("label")}
    assert '"[[~s => t], [r => q] -> -p]"' in labels
    with pytest.raises(ValueError):
        to_dot(saf, "everything")


class TestKernels:
    def test_get(self):
        assert kernels.get("python") is kernels.pure
        assert kernels.get() is kernels.active
        with pytest.raises(ValueError):
            kernels.get("fortran")

    def test_compiled_missing_raises(self, monkeypatch):
        monkeypatch.setattr(kernels, "compiled", None)
        with pytest.raises(RuntimeError):
            kernels.get("compiled")

    def test_pure_python_switch(self):
        env = dict(os.environ, ASPIC_PURE_PYTHON="1")
        code = "from aspic import kernels; print(kernels.BACKEND, kernels.compiled is None)"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        assert out.stdout.split() == ["python", "True"]

    @pytest.mark.skipif(kernels.compiled is None, reason="extension not built")
    def test_compiled_is_default_when_built(self):
        assert kernels.BACKEND == "compiled" and kernels.active is kernels.compiled
