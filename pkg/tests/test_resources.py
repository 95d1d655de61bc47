import io
from fractions import Fraction

import pytest

from fftfold.resources import (
    RESOURCE_COLUMNS,
    folded_resources,
    powers_of_two,
    reduction_factor,
    resource_table,
    traditional_resources,
    write_figure_series,
    write_resource_csv,
)

# Number of butterfly units, traditional vs folded, as published
TABLE_II = {8: (12, 4), 16: (32, 8), 32: (80, 16), 64: (192, 32),
            128: (448, 64), 256: (1024, 128), 512: (2304, 256), 1024: (5120, 512)}


def test_traditional():
    r = traditional_resources(8)
    assert (r.butterfly_units, r.multipliers, r.adders_subtractors, r.frame_cycles) == (12, 12, 24, 3)
    assert traditional_resources(1024).butterfly_units == 5120


def test_folded():
    r = folded_resources(8)
    assert (r.butterfly_units, r.multipliers, r.adders_subtractors) == (4, 4, 8)
    assert r.rom_coefficients == 12
    assert r.frame_cycles == 3
    assert folded_resources(512).butterfly_units == 256


@pytest.mark.parametrize("n,alpha", [(8, Fraction(1, 3)), (1024, Fraction(1, 10)), (2, Fraction(1))])
def test_reduction_factor(n, alpha):
    assert reduction_factor(n) == alpha


@pytest.mark.parametrize("bad", [0, 1, 12, 100])
def test_rejects(bad):
    with pytest.raises(ValueError):
        folded_resources(bad)
    with pytest.raises(ValueError):
        traditional_resources(bad)


def test_table_ii():
    rows = resource_table(TABLE_II)
    assert {r.n: (r.traditional_bu, r.folded_bu) for r in rows} == TABLE_II


def test_table_n16_n64():
    (r16, r64) = resource_table([16, 64])
    assert (r16.traditional_mult, r16.folded_mult) == (32, 8)
    assert (r16.traditional_addsub, r16.folded_addsub) == (64, 16)
    assert (r64.traditional_bu, r64.folded_bu) == (192, 32)


@pytest.mark.parametrize("k", range(1, 21))
def test_identities(k):
    n = 1 << k
    f, t = folded_resources(n), traditional_resources(n)
    assert f.butterfly_units * k == t.butterfly_units
    assert reduction_factor(n) * k == 1
    assert f.multipliers == f.butterfly_units
    assert f.adders_subtractors == 2 * f.butterfly_units


def test_powers_of_two():
    assert powers_of_two(8, 32) == [8, 16, 32]
    with pytest.raises(ValueError):
        powers_of_two(32, 8)
    with pytest.raises(ValueError):
        powers_of_two(8, 48)


def test_csv():
    buf = io.StringIO()
    write_resource_csv([8, 16], buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ",".join(RESOURCE_COLUMNS)
    assert lines[1:] == [
        "8,traditional,12,12,24,12,3,1,3",
        "8,folded,4,4,8,12,3,1,3",
        "16,traditional,32,32,64,32,4,1,4",
        "16,folded,8,8,16,32,4,1,4",
    ]


def test_figure_series():
    buf = io.StringIO()
    write_figure_series([8, 16], buf, "adders")
    assert buf.getvalue().splitlines() == ["n,traditional,folded", "8,24,8", "16,64,16"]
