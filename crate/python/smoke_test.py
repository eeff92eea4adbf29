#!/usr/bin/env python3
"""Smoke test for the phimat_py extension module.

Builds the cdylib with cargo, loads it, and drives the main types and
operations end to end. Run from anywhere:

    python3 python/smoke_test.py
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_and_import():
    subprocess.run(
        ["cargo", "build", "-p", "phimat-py"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "debug" / "libphimat_py.so"
    if not lib.exists():  # macOS fallback
        lib = ROOT / "target" / "debug" / "libphimat_py.dylib"
    stage = Path(tempfile.mkdtemp(prefix="phimat-py-"))
    shutil.copy(lib, stage / "phimat_py.so")
    sys.path.insert(0, str(stage))
    import phimat_py

    return phimat_py


def main():
    pm = build_and_import()
    print(f"loaded phimat_py {pm.__version__}")

    # Free system: dimension is cardinality, all axioms hold.
    free = pm.free_system(3)
    assert free.dimension(["a", "b"]) == 2
    assert free.closure(["a", "b"]) == ["a", "b"]
    axioms = json.loads(free.check_axioms_json())
    assert all(axioms[k]["verdict"] == "pass" for k in axioms), axioms
    print("free_system(3): axioms pass, dimension = cardinality")

    # Fano: rank 3, 28 bases, and a clean round trip.
    fano = pm.fano()
    assert fano.rank_of_ground() == 3
    assert len(fano.bases()) == 28
    assert len(fano.flats()) == 16
    assert fano.is_simple()
    assert fano.closure(["a", "b"]) == ["a", "b", "c"]
    rt = json.loads(fano.roundtrip_json())
    assert rt["obligations"] and all(o["verdict"] == "pass" for o in rt["obligations"])
    print("fano: rank 3, 16 flats, 28 bases, roundtrip is the identity")

    # Matroid -> phi-system: the six statements all pass.
    sys_fano, report = fano.to_whitehead()
    report = json.loads(report)
    assert all(o["verdict"] == "pass" for o in report["obligations"]), report
    assert sys_fano.dimension(list("abcdefg")) == 3
    assert sys_fano.is_prime(["a", "b"]) and sys_fano.is_axial(["a", "b", "e"])
    print("fano.to_whitehead(): all statements pass")

    # The searched counterexample: lambda/mu/nu'/pi hold, tau fails.
    nonmax = pm.non_maximal_example()
    axioms = json.loads(nonmax.check_axioms_json())
    for name in ("lambda", "mu", "nu_prime", "pi"):
        assert axioms[name]["verdict"] == "pass", axioms
    tau = json.loads(nonmax.check_proposition_json("tau"))
    assert tau["verdict"] == "fail"
    witness = tau["witness"]["subsets"][0]
    assert nonmax.is_prime(witness) and not nonmax.is_axial(witness)
    try:
        nonmax.to_matroid()
        raise AssertionError("non-maximal system must be rejected")
    except ValueError as e:
        assert "phi-maximal" in str(e)
    print(f"non_maximal_example: tau fails with witness {witness}, translation rejected")

    # U_{1,2} is not simple and is rejected by the backward direction.
    u12 = pm.uniform(1, 2)
    assert not u12.is_simple()
    try:
        u12.to_whitehead()
        raise AssertionError("U_{1,2} must be rejected")
    except ValueError as e:
        assert "simple" in str(e)
    print("uniform(1, 2): rejected for its parallel pair")

    # Text format round trip through parse_instance.
    text = pm.graphic_k4().to_text("flats")
    back = pm.parse_instance(text)
    assert back.rank_of_ground() == 3 and len(back.bases()) == 16
    assert back.to_text("flats") == text
    print("graphic_k4: text emit/parse round trip holds")

    print("smoke test OK")


if __name__ == "__main__":
    main()
