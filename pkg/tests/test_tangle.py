"""The tangle language, orientation propagation, moves, and turning numbers."""

import random

import pytest

from tanglex.tangle import (CAP, CUP, OVER, UNDER, EndpointCountError,
                            MorseWord, MoveError, OrientationError, R1Move,
                            R2Move, R3Move, Slice, TangleSyntaxError,
                            VALID_R3_TRIPLES, WidthError, analyze, apply_move,
                            braid_to_tangle, crossing_signs, format_word,
                            move_sites, parse, random_word,
                            turning_number, writhe)


class TestParse:
    def test_turnback(self):
        w = parse("bottom 1 up; cup 2 ccw; cap 1;")
        assert analyze(w).widths == (1, 3, 1)
        assert w.endpoint_count == 2

    def test_single_crossing(self):
        w = parse("bottom 2 up up; x+ 1;")
        assert w.slices == (Slice(OVER, 1),)
        assert w.endpoint_count == 4

    def test_closed_loop(self):
        w = parse("bottom 0; cup 1 ccw; cup 1 ccw; cap 2; cap 1;")
        assert analyze(w).widths == (0, 2, 4, 2, 0)
        assert w.endpoint_count == 0

    def test_format_roundtrip(self):
        rng = random.Random(2)
        for _ in range(20):
            w = random_word(rng, max_crossings=4, bottom=rng.choice((0, 1, 2)))
            assert parse(format_word(w)) == w

    def test_syntax_errors(self):
        with pytest.raises(TangleSyntaxError):
            parse("bogus 1;")
        with pytest.raises(TangleSyntaxError):
            parse("cup 1 cw;")                        # missing bottom
        with pytest.raises(TangleSyntaxError):
            parse("bottom 2 up;")                     # missing orientation
        with pytest.raises(TangleSyntaxError):
            parse("bottom 1 up; cup 2;")              # missing cup label
        with pytest.raises(TangleSyntaxError):
            parse("bottom 1 up; cap x;")              # non-integer
        with pytest.raises(TangleSyntaxError):
            parse("bottom 1 up; bottom 1 up;")        # duplicate
        err = None
        try:
            parse("bottom 1 up; cup 2 cw; zap 3;")
        except TangleSyntaxError as exc:
            err = str(exc)
        assert err and "statement 2" in err           # position reported

    def test_width_errors(self):
        with pytest.raises(WidthError):
            parse("bottom 1 up; cap 1;")
        with pytest.raises(WidthError):
            parse("bottom 2 up down; cap 5;")
        with pytest.raises(WidthError):
            parse("bottom 1 up; x+ 1;")
        with pytest.raises(WidthError):
            parse("bottom 0; cup 2 cw;")

    def test_orientation_errors(self):
        with pytest.raises(OrientationError):
            parse("bottom 2 up up; cap 1;")           # parallel strands capped
        with pytest.raises(OrientationError):
            parse("bottom 2 up down; cup 2 cw; cap 1;")  # up meets cup's up leg
        parse("bottom 2 up down; cap 1;")             # antiparallel cap is fine


class TestCrossingSigns:
    def test_anchor(self):
        assert crossing_signs(parse("bottom 2 up up; x+ 1;"))[0].sign == 1
        assert crossing_signs(parse("bottom 2 up up; x- 1;"))[0].sign == -1

    def test_reversal_of_both_strands(self):
        for k in ("x+", "x-"):
            up = crossing_signs(parse(f"bottom 2 up up; {k} 1;"))[0]
            down = crossing_signs(parse(f"bottom 2 down down; {k} 1;"))[0]
            assert up.sign == down.sign

    def test_antiparallel_signs(self):
        assert crossing_signs(parse("bottom 2 up down; x+ 1;"))[0].sign == -1
        assert crossing_signs(parse("bottom 2 up down; x- 1;"))[0].sign == 1

    def test_component_reversal(self):
        # reversing every strand of the diagram preserves each crossing sign;
        # a kink's self-crossing keeps its sign when its one component reverses
        w = parse("bottom 1 up; cup 2 cw; x+ 1; cap 2;")
        r = parse("bottom 1 down; cup 2 ccw; x+ 1; cap 2;")
        assert [c.sign for c in crossing_signs(w)] == \
               [c.sign for c in crossing_signs(r)]

    def test_writhe(self):
        assert writhe(braid_to_tangle([1, 1, 1], 2)) == 3
        assert writhe(braid_to_tangle([1, -1], 2)) == 0


class TestTurningNumber:
    def test_circles(self):
        assert turning_number(parse("bottom 1 up; cup 2 ccw; cap 2;")) == 1
        assert turning_number(parse("bottom 1 up; cup 2 cw; cap 2;")) == -1

    def test_straight_strand(self):
        assert turning_number(parse("bottom 1 up;")) == 0
        assert turning_number(parse("bottom 1 up; cup 2 ccw; cap 1;")) == 0

    def test_positive_kink_is_minus_one(self):
        w = parse("bottom 1 up; cup 2 cw; x+ 1; cap 2;")
        assert turning_number(w) == -1

    def test_requires_two_endpoints(self):
        with pytest.raises(EndpointCountError):
            turning_number(parse("bottom 2 up up;"))
        with pytest.raises(EndpointCountError):
            turning_number(parse("bottom 0;"))

    def test_wiggle_cancels(self):
        w = parse("bottom 0; cup 1 ccw; cup 1 ccw; cap 2; cap 1;")
        w2 = MorseWord(1, w.slices, ("up",), w.cup_orientations)
        assert turning_number(w2) == 1  # the wiggly circle still turns once

    def test_r1_changes_tau_by_one(self):
        rng = random.Random(9)
        for _ in range(30):
            w = random_word(rng, max_crossings=3, bottom=1)
            t = rng.randrange(len(w.slices) + 1)
            width = analyze(w).widths[t]
            p = rng.randint(1, width)
            mv = R1Move(t, p, rng.choice(("left", "right")),
                        rng.choice(("over", "under")))
            assert abs(turning_number(apply_move(w, mv)) - turning_number(w)) == 1

    def test_r2_r3_preserve_tau(self):
        rng = random.Random(10)
        done = 0
        while done < 30:
            w = random_word(rng, max_crossings=5, bottom=1)
            moves = [m for m in move_sites(w) if not isinstance(m, R1Move)]
            if not moves:
                continue
            mv = rng.choice(moves)
            assert turning_number(apply_move(w, mv)) == turning_number(w)
            done += 1

    def test_crossing_switch_and_smoothing_preserve_tau(self):
        from tanglex.invariant import with_crossing, with_crossing_smoothed
        rng = random.Random(11)
        done = 0
        while done < 30:
            w = random_word(rng, max_crossings=5, bottom=1)
            nc = w.crossing_count()
            if nc == 0:
                continue
            i = rng.randrange(nc)
            tau = turning_number(w)
            assert turning_number(with_crossing(w, i, OVER)) == tau
            assert turning_number(with_crossing(w, i, UNDER)) == tau
            assert turning_number(with_crossing_smoothed(w, i)) == tau
            done += 1


class TestBraids:
    def test_empty_braid(self):
        w = braid_to_tangle([], 1)
        assert w.slices == () and w.endpoint_count == 2

    def test_trefoil_structure(self):
        w = braid_to_tangle([1, 1, 1], 2)
        assert w.endpoint_count == 2
        assert w.crossing_count() == 3
        assert [c.sign for c in crossing_signs(w)] == [1, 1, 1]

    def test_figure_eight_structure(self):
        w = braid_to_tangle([1, -2, 1, -2], 3)
        assert w.endpoint_count == 2
        assert [c.sign for c in crossing_signs(w)] == [1, -1, 1, -1]

    def test_bad_generator(self):
        with pytest.raises(ValueError):
            braid_to_tangle([2], 2)
        with pytest.raises(ValueError):
            braid_to_tangle([0], 2)
        with pytest.raises(ValueError):
            braid_to_tangle([1], 1)


class TestMoves:
    def test_r1_insertion(self):
        w = parse("bottom 1 up;")
        k = apply_move(w, R1Move(0, 1, "right", "over"))
        assert k.crossing_count() == 1 and k.endpoint_count == 2

    def test_r2_insertion(self):
        w = parse("bottom 2 up up;")
        r = apply_move(w, R2Move(0, 1, "over"))
        assert [s.kind for s in r.slices] == [OVER, UNDER]

    def test_r3_slide(self):
        w = parse("bottom 3 up up up; x+ 1; x+ 2; x+ 1;")
        r = apply_move(w, R3Move(0))
        assert [s.pos for s in r.slices] == [2, 1, 2]
        assert [s.kind for s in r.slices] == [OVER, OVER, OVER]

    def test_r3_requires_valid_triple(self):
        w = parse("bottom 3 up up up; x+ 1; x- 2; x+ 1;")
        with pytest.raises(MoveError):
            apply_move(w, R3Move(0))
        assert (OVER, UNDER, OVER) not in VALID_R3_TRIPLES
        assert (UNDER, OVER, UNDER) not in VALID_R3_TRIPLES
        assert len(VALID_R3_TRIPLES) == 6

    def test_inapplicable_sites(self):
        w = parse("bottom 1 up;")
        with pytest.raises(MoveError):
            apply_move(w, R2Move(0, 1, "over"))   # width 1
        with pytest.raises(MoveError):
            apply_move(w, R1Move(0, 2, "left", "over"))
        with pytest.raises(MoveError):
            apply_move(w, R3Move(0))

    def test_move_sites_all_apply(self):
        rng = random.Random(4)
        for _ in range(10):
            w = random_word(rng, max_crossings=4, bottom=1)
            for mv in move_sites(w):
                w2 = apply_move(w, mv)
                assert w2.endpoint_count == w.endpoint_count

    def test_width_bookkeeping_property(self):
        rng = random.Random(5)
        for _ in range(40):
            w = random_word(rng, max_crossings=5, bottom=rng.choice((0, 1, 2)))
            widths = analyze(w).widths
            total = w.bottom_count
            for s, delta in zip(w.slices, (b - a for a, b in
                                           zip(widths, widths[1:]))):
                assert delta == {CUP: 2, CAP: -2}.get(s.kind, 0)
                total += delta
            assert total == widths[-1] == w.top_count
