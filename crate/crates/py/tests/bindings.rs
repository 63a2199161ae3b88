use pyo3::prelude::*;

#[test]
fn module_round_trip_through_python() {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(marked_braids_py::marked_braids_py)(py);
        let modules = py.import("sys").unwrap().getattr("modules").unwrap();
        modules.set_item("marked_braids_py", module).unwrap();
        let code = c"
import marked_braids_py as mb
w = mb.BraidWord('s1[1] S2[0]', 'z2', 3)
assert str(mb.f_map(w)) == 'd1 s1 d2 S2'
assert str(mb.phi(w)) == 'v1 S2'
assert mb.g_map(mb.f_map(w)) == w
assert mb.classical_equal(mb.BraidWord('s1 s2 s1'), mb.BraidWord('s2 s1 s2'))
assert mb.equal(mb.BraidWord('s1[1] s1[1]', 'z2', 3), mb.BraidWord('e', 'z2', 3)).kind == 'distinct'
assert mb.f_welldefined_report(3).all_equal()
try:
    mb.BraidWord('s9', 'classical', 3)
    raise SystemExit('accepted out-of-range index')
except ValueError:
    pass
";
        py.run(code, None, None).unwrap();
    });
}
