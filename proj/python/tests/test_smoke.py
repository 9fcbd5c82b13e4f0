import os
import subprocess
from fractions import Fraction

import pytest

import delliptic


def test_genus2_class():
    assert delliptic.class_of("m2", 2) == {"delta_0": Fraction(6), "delta_1": Fraction(24)}
    assert delliptic.class_str("m2", 3) == "32*delta_0 + 96*delta_1"
    assert all(v == 0 for v in delliptic.class_of("m3", 1).values())


def test_fixed_target_and_pointed():
    assert delliptic.class_of("m2e", 2) == {"delta_00": Fraction(54, 5), "delta_01": Fraction(84, 5)}
    c = delliptic.class_of("m21", 2)
    assert c["delta_00"] == Fraction(1, 4)
    assert c["xi_1"] == 6 and c["delta_11"] == 24


def test_genus3_kappa2():
    assert delliptic.class_of("m3", 2)["kappa_2"] == -108
    assert delliptic.family_labels("m3")[0] == "lambda^2"


def test_series_and_fit():
    s = delliptic.series("m2", "delta_0", 30)
    assert s[:4] == [0, 0, 6, 32]
    combo = delliptic.fit(s, 6)
    assert combo is not None
    assert combo[(0, 1, 0)] == Fraction(1, 720)
    assert combo[(2, 0, 0)] == Fraction(1, 144)


def test_fit_refutes_d_tau():
    def tau(n):
        return sum(1 for a in range(1, n + 1) if n % a == 0)

    assert delliptic.fit([0] + [d * tau(d) for d in range(1, 31)], 6) is None


def test_eisenstein():
    assert delliptic.eisenstein(2, 2) == [1, -24, -72]


def test_counts_and_hurwitz():
    assert delliptic.count("sublattices", 6) == 12
    assert delliptic.count("pointed-isogenies", 4) == 21
    assert delliptic.count("dd2222", 2) == 720
    assert delliptic.hurwitz_number(3, [(3,), (3,), (3,)]) == Fraction(1, 3)
    assert delliptic.hurwitz_number(5, ["3,2", "3,2", "3,1,1"]) == 1


def test_errors():
    with pytest.raises(delliptic.PreconditionError):
        delliptic.class_of("m2", 0)
    with pytest.raises(delliptic.PreconditionError):
        delliptic.series("m2", "bogus", 3)
    with pytest.raises(delliptic.Error):
        delliptic.class_of("m9", 2)


def test_verify_and_fault_injection():
    ok = delliptic.verify(max_d=3, order=12)
    assert ok["schema"] == "delliptic/1" and ok["ok"] is True
    bad = delliptic.verify(max_d=2, order=12, inject=["M12:Delta_0:Delta_1:2"])
    assert bad["ok"] is False
    assert bad["first_failure"] == "pairing_tables"


@pytest.mark.skipif("DELLIPTIC_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["DELLIPTIC_CLI"]
    assert subprocess.run([cli, "class", "m2", "--d", "2"], capture_output=True, text=True).stdout == "6*delta_0 + 24*delta_1\n"
    assert subprocess.run([cli, "class", "m2", "--d", "0"], capture_output=True).returncode == 2
    assert subprocess.run([cli, "verify", "--max-d", "1", "--inject-pairing", "M2:Delta_01:Delta_1:0"], capture_output=True).returncode == 1
