import pytest

import carter


def test_check_and_decompose():
    assert carter.satisfies_star([5, 4, 1], 3) == (False, (2, 1, 2))
    assert carter.is_ell_partition([17, 15, 7, 5, 1, 1], 3)
    assert carter.decompose([17, 15, 7, 5, 1, 1], 3) == ([2, 1, 1], 3, [3, 3, 1, 1])
    assert carter.reconstruct([2, 1, 1], 3, [3, 3, 1, 1], 3) == [17, 15, 7, 5, 1, 1]


def test_cores_and_abacus():
    assert carter.ell_core([6, 4], 3) == ([3, 1], 2)
    assert carter.abacus([4, 2, 2, 1, 1], 3) == ".oo\n.oo\n..o\n"
    assert carter.runner_removal_bijection([4, 2, 2, 1, 1], 3) == [2, 1]
    assert carter.count_cores(3, 3) == 4
    assert carter.count_cores(40, 40) == 26536589497469056215210


def test_series():
    assert carter.carter_series(2, 8) == [1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert carter.core_series(3, 3) == [1, 2, 3, 4]
    assert carter.series_expand_rational([1], [1, -1, -1], 5) == [1, 1, 2, 3, 5, 8]
    assert carter.enumerate_fixed_core_by_weight([6, 4, 2, 1, 1], 3, 5) == [
        [21, 4, 2, 1, 1],
        [18, 7, 2, 1, 1],
        [15, 10, 2, 1, 1],
        [15, 7, 5, 1, 1],
        [12, 10, 5, 1, 1],
    ]


def test_crystal():
    sig = carter.signature([8, 5, 4, 1], 1, 3)
    assert sig["raw"] == "+-+-"
    assert (sig["eps"], sig["phi"]) == (1, 1)
    assert carter.e_tilde([8, 5, 4, 1], 1, 3) == [7, 5, 4, 1]
    assert carter.f_tilde([8, 5, 4, 1], 1, 3) == [8, 5, 4, 2]
    assert carter.e_tilde([], 0, 3) is None
    nodes, edges = carter.build_crystal(2, 2)
    assert nodes == [[], [1], [2]]
    assert edges == [(0, 0, 1), (1, 1, 2)]
    report = carter.verify_theorems(3, 8)
    assert report["ok"]


def test_errors():
    with pytest.raises(ValueError):
        carter.decompose([5, 4, 1], 3)
    with pytest.raises(ValueError):
        carter.is_core([1, 2], 3)
    with pytest.raises(ValueError):
        carter.count_cores(1, 3)


def test_run_cli():
    code, out, _ = carter.run_cli(["decompose", "--ell", "3", "[17,15,7,5,1,1]"])
    assert code == 0
    assert out == '{"kappa":[3,3,1,1],"mu":[2,1,1],"r":3}\n'
    code, _, err = carter.run_cli(["check", "--ell", "1", "[1]"])
    assert code == 2
    assert err.startswith("error:")
