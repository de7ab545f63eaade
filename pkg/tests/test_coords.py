import math

import pytest

from dyntwist.coords import (
    CurveTag,
    DynnikovCoord,
    TorusCoord,
    curve_kind,
    dynnikov_to_torus,
    is_essential,
    torus_to_dynnikov,
)


def test_reference_curve_coordinates():
    # The three reference curves lift to (1,0), (0,1), (1,1).
    assert torus_to_dynnikov((1, 0)) == (0, 1)
    assert torus_to_dynnikov((0, 1)) == (0, -1)
    assert torus_to_dynnikov((1, 1)) == (-1, 0)


def test_chart_change_examples():
    assert torus_to_dynnikov((13, -10)) == (10, 3)
    assert dynnikov_to_torus((10, 3)) == (13, -10)
    assert dynnikov_to_torus((0, 1)) == (1, 0)
    # At b == 0 both inverse branches agree up to sign.
    assert dynnikov_to_torus((-1, 0)) == (1, 1)


def test_canonical_representative():
    assert TorusCoord(-3, 5).canonical() == (3, -5)
    assert TorusCoord(0, -2).canonical() == (0, 2)
    assert TorusCoord(0, 2).canonical() == (0, 2)
    assert TorusCoord(4, -7).canonical() == (4, -7)
    assert dynnikov_to_torus((0, -1)) == (0, 1)


def test_zero_rejected():
    with pytest.raises(ValueError):
        torus_to_dynnikov((0, 0))
    with pytest.raises(ValueError):
        dynnikov_to_torus((0, 0))
    with pytest.raises(ValueError):
        curve_kind((0, 0))


BOX = 60


def _nonzero_box(box):
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            if x or y:
                yield x, y


def test_round_trip_dynnikov_to_torus_and_back():
    for a, b in _nonzero_box(BOX):
        assert torus_to_dynnikov(dynnikov_to_torus((a, b))) == (a, b)


def test_double_cover_even_and_injective_on_canonical_reps():
    # v and -v collapse, and distinct canonical reps have distinct images.
    seen = {}
    for p, q in _nonzero_box(BOX):
        d = torus_to_dynnikov((p, q))
        assert d != (0, 0)
        assert torus_to_dynnikov((-p, -q)) == d
        canon = TorusCoord(p, q).canonical()
        prior = seen.setdefault(d, canon)
        assert prior == canon, f"{d} has two canonical preimages {prior}, {canon}"
    for p, q in _nonzero_box(BOX):
        lift = dynnikov_to_torus(torus_to_dynnikov((p, q)))
        assert lift == (p, q) or lift == (-p, -q)


def test_image_is_all_nonzero_pairs():
    # Within the box, plenty of surjectivity: every (a,b) we round-trip hits.
    hit = {torus_to_dynnikov((p, q)) for p, q in _nonzero_box(20)}
    for a, b in _nonzero_box(9):
        assert (a, b) in hit


# Sector linearity: on each of the 8 sectors bounded by the axes and the
# diagonals, the chart change is one fixed integer matrix.  The matrices
# below were derived by hand from the absolute-value formula (independent of
# the implementation) and all have determinant 1.
SECTORS = [
    # (membership test, ((m11, m12), (m21, m22)))
    (lambda p, q: p >= q >= 0, ((0, -1), (1, -1))),
    (lambda p, q: q >= p >= 0, ((-1, 0), (1, -1))),
    (lambda p, q: q >= -p >= 0, ((-1, 0), (-1, -1))),
    (lambda p, q: -p >= q >= 0, ((0, 1), (-1, -1))),
    (lambda p, q: -p >= -q >= 0, ((0, 1), (-1, 1))),
    (lambda p, q: -q >= -p >= 0, ((1, 0), (-1, 1))),
    (lambda p, q: -q >= p >= 0, ((1, 0), (1, 1))),
    (lambda p, q: p >= -q >= 0, ((0, -1), (1, 1))),
]


def test_sector_linearity_and_determinants():
    for member, ((m11, m12), (m21, m22)) in SECTORS:
        assert m11 * m22 - m12 * m21 in (1, -1)
        samples = [(p, q) for p, q in _nonzero_box(25) if member(p, q)]
        assert len(samples) > 100
        for p, q in samples:
            assert torus_to_dynnikov((p, q)) == (m11 * p + m12 * q, m21 * p + m22 * q)


def test_min_sign_identity():
    for p, q in _nonzero_box(40):
        a, b = torus_to_dynnikov((p, q))
        assert abs(a) == min(abs(p), abs(q))
        if p * q != 0:
            assert (a > 0) == (p * q < 0) or a == 0


def test_curve_kind_examples():
    kind = curve_kind((0, 1))
    assert kind.tag is CurveTag.ESSENTIAL and kind.multiplicity == 1

    kind = curve_kind((2, 0))
    assert kind.tag is CurveTag.MULTICURVE
    assert kind.multiplicity == 2
    assert kind.primitive_part == (1, 0)

    kind = curve_kind((10, 3))
    assert kind.tag is CurveTag.ESSENTIAL and kind.multiplicity == 1
    assert kind.primitive_part == (10, 3)


def test_curve_kind_consistency():
    for a, b in _nonzero_box(25):
        kind = curve_kind((a, b))
        p, q = dynnikov_to_torus((a, b))
        assert kind.multiplicity == math.gcd(p, q)
        assert (kind.tag is CurveTag.ESSENTIAL) == (kind.multiplicity == 1)
        assert is_essential((a, b)) == (kind.multiplicity == 1)
        # The primitive part scales back up to the original lift.
        pp, pq = dynnikov_to_torus(kind.primitive_part)
        m = kind.multiplicity
        assert (m * pp, m * pq) in ((p, q), (-p, -q))


def test_named_fields():
    d = DynnikovCoord(10, 3)
    assert (d.a, d.b) == (10, 3)
    t = dynnikov_to_torus(d)
    assert (t.p, t.q) == (13, -10)
