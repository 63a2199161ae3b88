"""Smoke test for the marked_braids_py extension module.

Build and install first:
    pip install --no-build-isolation -e crates/py
then run:
    python python/smoke_test.py
"""

import marked_braids_py as mb


def main() -> None:
    a = mb.BraidWord("s1 s2 s1", "classical", 3)
    b = mb.BraidWord("s2 s1 s2", "classical", 3)
    assert mb.classical_equal(a, b)
    assert a.permutation() == [3, 2, 1]
    assert len(mb.dynnikov(a)) == 6

    odd = mb.BraidWord("s1[1]", "z2", 3)
    assert str(mb.f_map(odd)) == "d1 s1 d2"
    assert str(mb.phi(odd)) == "v1"
    assert mb.g_map(mb.f_map(odd)) == odd
    assert not mb.BraidWord("d1", "dotted", 2).is_good()

    v = mb.equal(mb.BraidWord("v1 v2 v1", "virtual", 3), mb.BraidWord("v2 v1 v2", "virtual", 3))
    assert v.kind == "equal" and v.trace.rstrip().endswith("QED")
    sq = mb.equal(mb.BraidWord("s1[1] s1[1]", "z2", 3), mb.BraidWord("e", "z2", 3))
    assert sq.kind == "distinct" and sq.certificate

    g = mb.BraidWord("s1[1] s2[1] s1[1]", "gbraid", 3, group="Z3")
    assert g.dialect == "gbraid:Z3"

    report = mb.phi_welldefined_report(3)
    assert report.all_equal() and len(report) == 4
    assert mb.twisted_lune_check(1, 3).kind == "equal"
    assert mb.z2_iso_report(4)[0] == 0
    passed, log = mb.move_invariance_harness(mb.f_map(odd), 20, 7)
    assert passed and log.count("STEP") == 20

    try:
        mb.BraidWord("s1[1] d2", "z2", 3)
    except ValueError as e:
        assert "d2" in str(e) or "dot" in str(e)
    else:
        raise AssertionError("dot accepted in z2")

    assert mb.BraidWord("d1 s1", "dotted", 3).render_svg().startswith("<?xml")
    print("smoke test passed")


if __name__ == "__main__":
    main()
