import pytest

from dyntwist.actions import (
    BraidLetter,
    FixedPointError,
    Generator,
    TrackFamily,
    apply_braid,
    apply_twist,
    apply_word,
    jump_path,
    track_of,
    twist_via_jumps,
)
from dyntwist.coords import dynnikov_to_torus

TC, TCI, TD, TDI = Generator.TC, Generator.TC_INV, Generator.TD, Generator.TD_INV
S1, S1I, S2, S2I = BraidLetter.S1, BraidLetter.S1_INV, BraidLetter.S2, BraidLetter.S2_INV


def _box(bound):
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a or b:
                yield a, b


def test_generator_inverses():
    assert TC.inverse is TCI and TCI.inverse is TC
    assert TD.inverse is TDI and TDI.inverse is TD
    assert S1.inverse is S1I and S2I.inverse is S2


def test_braid_letter_examples():
    assert apply_braid(S1, (10, 3)) == (3, -7)
    assert apply_braid(S1, (3, -7)) == (-7, -3)  # second application hits tc's image
    assert apply_braid(S1, (0, 1)) == (0, 1)
    assert apply_braid(S2I, (1, 0)) == (0, 1)
    assert apply_braid(S2, (0, 1)) == (1, 0)


def test_twist_examples():
    assert apply_twist(TC, (10, 3)) == (-7, -3)
    assert apply_twist(TD, (-1, -3)) == (-1, -1)
    assert apply_twist(TDI, (1, -2)) == (1, 0)
    assert apply_twist(TC, (0, 1)) == (0, 1)    # fixed ray of tc
    assert apply_twist(TD, (0, -1)) == (0, -1)  # fixed ray of td
    assert apply_twist(TDI, (1, 0)) == (-1, 0)
    assert apply_twist(TC, (1, 0)) == (-1, 0)


def test_apply_word():
    assert apply_word([TC, TD, TC, TD, TD], (10, 3)) == (0, 1)
    assert apply_word([], (5, 7)) == (5, 7)
    assert apply_word([TC, TCI], (4, 9)) == (4, 9)


def test_zero_rejected():
    for fn in (lambda: apply_braid(S1, (0, 0)),
               lambda: apply_twist(TC, (0, 0)),
               lambda: apply_word([TC], (0, 0)),
               lambda: twist_via_jumps(TC, (0, 0))):
        with pytest.raises(ValueError):
            fn()


def test_braid_letters_invert_each_other():
    for d in _box(30):
        for letter in BraidLetter:
            assert apply_braid(letter.inverse, apply_braid(letter, d)) == d


def test_twists_invert_each_other():
    for d in _box(30):
        for gen in Generator:
            assert apply_twist(gen.inverse, apply_twist(gen, d)) == d


def test_squared_letters_equal_twists():
    pairs = [(S1, TC), (S1I, TCI), (S2, TD), (S2I, TDI)]
    for d in _box(40):
        for letter, gen in pairs:
            assert apply_braid(letter, apply_braid(letter, d)) == apply_twist(gen, d)


def test_central_symmetry():
    for a, b in _box(40):
        image = apply_twist(TC, (-a, -b))
        assert apply_twist(TD, (a, b)) == (-image.a, -image.b)


# Region images of the left twist: each closed-form branch is linear with
# determinant 1 and maps its region onto the image region, whose membership
# tests below were derived by inverting the branch matrices by hand.
REGIONS = [
    # (domain test, branch matrix rows, image test)
    (lambda a, b: a >= 0 and b <= a, ((-1, 1), (0, -1)),
     lambda a, b: a <= 0 and a + b <= 0),
    (lambda a, b: 0 <= a <= b <= 2 * a, ((-1, 1), (-2, 1)),
     lambda a, b: a >= 0 and b <= 0),
    (lambda a, b: b >= 2 * a and b >= 0, ((1, 0), (-2, 1)),
     lambda a, b: b >= 0 and 2 * a + b >= 0),
    (lambda a, b: a <= 0 and b <= 0, ((1, 1), (-2, -1)),
     lambda a, b: a + b >= 0 and 2 * a + b <= 0),
]


def test_region_images_and_branch_linearity():
    for domain, ((m11, m12), (m21, m22)), image in REGIONS:
        assert m11 * m22 - m12 * m21 == 1
        samples = [d for d in _box(20) if domain(*d)]
        assert len(samples) > 50
        for a, b in samples:
            out = apply_twist(TC, (a, b))
            assert out == (m11 * a + m12 * b, m21 * a + m22 * b)
            assert image(*out)


def test_branch_overlap_consistency():
    # Points satisfying two region conditions get the same value either way.
    for domain_i, (rows_i), _ in REGIONS:
        for domain_j, (rows_j), _ in REGIONS:
            for a, b in _box(15):
                if domain_i(a, b) and domain_j(a, b):
                    vi = (rows_i[0][0] * a + rows_i[0][1] * b,
                          rows_i[1][0] * a + rows_i[1][1] * b)
                    vj = (rows_j[0][0] * a + rows_j[0][1] * b,
                          rows_j[1][0] * a + rows_j[1][1] * b)
                    assert vi == vj


def test_jump_count_and_waypoints():
    # tc from (10, 3) runs along the index-10 track: 3 jumps to (10, 0),
    # 10 more to (0, -10), 7 more to (-7, -3) — 20 jumps in total.
    path = jump_path(TC, (10, 3))
    assert len(path) == 21
    assert path[0] == (10, 3)
    assert path[3] == (10, 0)
    assert path[13] == (0, -10)
    assert path[20] == (-7, -3)


def test_jumps_agree_with_closed_form():
    for d in _box(25):
        for gen in Generator:
            assert twist_via_jumps(gen, d) == apply_twist(gen, d)


def test_jumps_at_fixed_points():
    assert twist_via_jumps(TC, (0, 1)) == (0, 1)
    assert jump_path(TC, (0, 5)) == ((0, 5),)
    assert twist_via_jumps(TDI, (1, 0)) == (-1, 0)


def test_track_of_index_and_anchor():
    track = track_of((10, 3), TrackFamily.C, window=15)
    assert track.index == 10  # the lift (13, -10) rides the height-10 line
    assert (10, 0) in track.points
    pts = list(track.points)
    assert pts.index((-7, -3)) - pts.index((10, 3)) == 20  # one tc application apart

    track = track_of((1, 0), TrackFamily.C, window=5)
    assert track.index == 1
    assert (1, 0) in track.points and (0, -1) in track.points and (-1, 0) in track.points
    assert (0, 1) not in track.points  # that one sits on the fixed ray


def test_track_points_ride_one_line():
    track = track_of((10, 3), TrackFamily.C, window=15)
    for pt in track.points:
        p, q = dynnikov_to_torus(pt)
        assert abs(q) == 10
    track = track_of((5, -2), TrackFamily.D, window=9)
    n = track.index
    for pt in track.points:
        p, q = dynnikov_to_torus(pt)
        assert abs(p) == n


def test_track_clockwise_steps_are_twist_jumps():
    # Walking 2n positions forward in the returned order is one twist.
    for anchor, family, gen in [((4, 0), TrackFamily.C, TC), ((4, 0), TrackFamily.D, TD)]:
        track = track_of(anchor, family, window=30)
        n = track.index
        pts = list(track.points)
        i = pts.index((4, 0))
        assert pts[i + 2 * n] == apply_twist(gen, (4, 0))


def test_track_consecutive_points_are_lattice_jumps():
    # One jump = the next lattice point of the broken line: a unit step on
    # the vertical rays, a diagonal step on the two middle segments.
    track = track_of((3, 0), TrackFamily.C, window=8)
    for u, v in zip(track.points, track.points[1:]):
        assert max(abs(v.a - u.a), abs(v.b - u.b)) == 1


def test_track_families_are_centrally_symmetric():
    c_track = track_of((1, 0), TrackFamily.C, window=5)
    d_track = track_of((1, 0), TrackFamily.D, window=5)
    assert {(-a, -b) for a, b in c_track.points} == set(d_track.points)


def test_track_degenerate_inputs():
    with pytest.raises(FixedPointError):
        track_of((0, 1), TrackFamily.C, window=5)
    with pytest.raises(FixedPointError):
        track_of((0, -1), TrackFamily.D, window=5)
    with pytest.raises(ValueError):
        track_of((10, 3), TrackFamily.C, window=4)  # window below the index


def test_track_multicurve_points_allowed():
    # Tracks cover the whole plane, not just primitive points.
    track = track_of((2, 0), TrackFamily.C, window=6)
    assert track.index == 2
    assert (2, 0) in track.points
