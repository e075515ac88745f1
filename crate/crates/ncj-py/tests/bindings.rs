use ncj_py::ncj_py;
use pyo3::prelude::*;

#[test]
fn module_from_embedded_interpreter() {
    pyo3::append_to_inittab!(ncj_py);
    Python::initialize();
    Python::attach(|py| {
        py.run(
            c"
import json, ncj
a = ncj.Algebra.catalog('Dt(2,1,0,0)')
assert a.dim == 4 and a.parity == [0, 0, 1, 1]
assert a.check('ncj')[0] and not a.check('jordan')[0]
assert a.product('x', 'y') == '(2)e1'
assert a.is_simple()
j = ncj.Algebra.catalog('Dt(2,1/2,0,0)')
assert j.derivations() == (5, 3) and j.all_derivations_inner()
assert ncj.Algebra.from_json(a.to_json()) == a
assert a.mutate('1/2').check('jordan')[0]
assert ncj.Algebra.catalog('Dt(-1,1,0,0)').isomorphic(ncj.Algebra.catalog('M(1,1)'))
assert ncj.Algebra.catalog('Dt(2,1/2,1,0)').isomorphic(ncj.Algebra.catalog('Dt(2,1/2,1/2,0)')) is None
m = ncj.Module.catalog('Sum(Reg(K10);Op(Reg(K10)))')
assert m.check()
assert [k for _, k in m.decompose()] == ['Reg', 'Reg^op']
assert len(ncj.kronecker(ncj.Algebra.catalog('Dual'), a)) == 2
try:
    ncj.Algebra.catalog('Nope')
    raise SystemExit('expected an error')
except ValueError:
    pass
r = json.loads(ncj.verify('c02'))
assert r['failed'] == 0 and r['passed'] > 0
",
            None,
            None,
        )
        .unwrap_or_else(|e| panic!("{e}"));
    });
}
