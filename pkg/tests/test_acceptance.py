"""The acceptance gate: one test per criterion, full trial counts.

Each test prints its one-line verdict (visible with ``pytest -s``); the
same checks back the CLI's ``verify-all``.  Expect several minutes for the
whole module, dominated by the Jordan-data sweep of criterion 4.
"""

from quiver_rpp import verify

SEED = 0


def _run(fn):
    result = fn(seed=SEED, quick=False)
    print(result)
    assert result.passed, str(result)


def test_criterion_01_hg_orientation_golden():
    _run(verify.criterion_1)


def test_criterion_02_pak_orientation_golden():
    _run(verify.criterion_2)


def test_criterion_03_zigzag_orientation_golden():
    _run(verify.criterion_3)


def test_criterion_04_jordan_data_agreement():
    _run(verify.criterion_4)


def test_criterion_05_a3_closed_formula():
    _run(verify.criterion_5)


def test_criterion_06_roundtrip_bijectivity():
    _run(verify.criterion_6)


def test_criterion_07_order_independence():
    _run(verify.criterion_7)


def test_criterion_08_hillman_grassl():
    _run(verify.criterion_8)


def test_criterion_09_pak():
    _run(verify.criterion_9)


def test_criterion_10_generating_functions():
    _run(verify.criterion_10)


def test_criterion_11_promotion_periodicity():
    _run(verify.criterion_11)


def test_criterion_12_structural_checks():
    _run(verify.criterion_12)
