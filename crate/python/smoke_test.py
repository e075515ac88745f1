"""Smoke test for the ncj extension module.

    pip install -e crates/ncj-py --no-build-isolation
    python python/smoke_test.py
"""
import json
import os
import sys
import tempfile

import ncj


def main():
    a = ncj.Algebra.catalog("Dt(2,1,0,0)")
    print(repr(a))
    print(a)
    assert a.dim == 4 and a.parity == [0, 0, 1, 1]
    ok, report = a.check("ncj")
    print(report)
    assert ok
    ok, report = a.check("jordan")
    print(report)
    assert not ok

    j = ncj.Algebra.catalog("Dt(2,1/2,0,0)")
    assert j.check("jordan")[0]
    assert j.derivations() == (5, 3)
    assert j.inner_derivations() == 5

    k10 = ncj.Algebra.catalog("K10")
    assert k10.is_simple()
    assert k10.check("jordan")[0]

    q2 = ncj.Algebra.catalog("Q(2)")
    spaces, relations = q2.peirce(["e11", "e22"])
    print(spaces)
    assert relations and len(spaces["U12"]) == 4

    with tempfile.TemporaryDirectory() as d:
        p = os.path.join(d, "mut.json")
        j.mutate("3").save(p)
        b = ncj.Algebra.load(p)
        assert b.check("ncj")[0]
        assert b == ncj.Algebra.catalog("Mut(Dt(2,1/2,0,0);3)")

    assert ncj.Algebra.catalog("Dt(-1,1,0,0)").isomorphic(ncj.Algebra.catalog("M(1,1)"))
    beta = ncj.Algebra.catalog("Dt(2,1/2,1,0)"), ncj.Algebra.catalog("Dt(2,1/2,1/2,0)")
    assert beta[0].isomorphic(beta[1]) is None
    assert ncj.Algebra.catalog("Dt(2,1/2,1,0)", "p7").isomorphic(ncj.Algebra.catalog("Dt(2,1/2,1/2,0)", "p7"))

    m = ncj.Module.catalog("Sum(Reg(K10);Op(Reg(K10)))")
    assert m.check()
    parts = m.decompose()
    assert [kind for _, kind in parts] == ["Reg", "Reg^op"]
    assert m.split_null_extension().check("ncj")[0]

    z = ncj.kronecker(ncj.Algebra.catalog("Dual"), a)
    print("Z basis:", z)
    assert len(z) == 2

    try:
        ncj.Algebra.catalog("Dt(2,1,0,0)", "p4")
    except ValueError as e:
        print("rejected:", e)
    else:
        raise AssertionError("p4 is not a field")

    r = json.loads(ncj.verify("c05"))
    print(f"verify c05: {r['passed']} passed, {r['failed']} failed")
    assert r["failed"] == 0
    print("smoke test OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
