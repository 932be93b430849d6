"""Length-spectrum tests: enumeration vs brute force, words, caching."""

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypzeta.errors import CapacityError, NonPrimitiveError, SingleLetterError
from hypzeta.length_spectrum import (
    GENERATOR_CONVENTION,
    LengthSpectrum,
    canonical_rotation,
    class_from_word,
    enumerate_spectrum,
    necklace_count,
    read_cache,
    trace_of_word,
    write_cache,
)


def brute_force_classes(max_trace):
    """Oracle: all binary words up to length max_trace - 1, canonicalized."""
    seen = {}
    for ell in range(2, max_trace):
        for bits in itertools.product("LR", repeat=ell):
            word = "".join(bits)
            if len(set(word)) < 2:
                continue
            if (word + word).find(word, 1) != len(word):
                continue
            canon = canonical_rotation(word)
            if canon in seen:
                continue
            trace = trace_of_word(canon)
            if trace <= max_trace:
                seen[canon] = trace
    return seen


words = st.text(alphabet="LR", min_size=1, max_size=12)


class TestClassFromWord:
    def test_llr_matrix(self):
        cls = class_from_word("LLR")
        assert cls.trace == 4
        # matrix of LLR is [[3,2],[1,1]]
        assert trace_of_word("LLR") == 4

    def test_square_rejected(self):
        with pytest.raises(NonPrimitiveError):
            class_from_word("LRLR")

    def test_single_letter_rejected(self):
        with pytest.raises(SingleLetterError):
            class_from_word("LLLL")
        with pytest.raises(SingleLetterError):
            class_from_word("R")

    def test_norm_length_consistency(self):
        cls = class_from_word("LR")
        assert cls.trace == 3
        assert abs(cls.length - 2.0 * math.acosh(1.5)) < 1e-15
        assert abs(cls.length - math.log(cls.norm)) < 1e-12
        assert cls.norm > 1.0 and cls.length > 0.0

    @given(words)
    @settings(max_examples=300, deadline=None)
    def test_rotations_map_to_same_class(self, word):
        if len(set(word)) < 2 or (word + word).find(word, 1) != len(word):
            return
        base = class_from_word(word)
        for i in range(len(word)):
            rotated = word[i:] + word[:i]
            assert class_from_word(rotated) == base

    @given(words)
    @settings(max_examples=300, deadline=None)
    def test_canonicalization_idempotent(self, word):
        once = canonical_rotation(word)
        assert canonical_rotation(once) == once

    def test_conjugation_invariance_of_trace(self):
        # trace is a class function: c w c^-1 has the same trace
        rng = random.Random(7)
        mats = {"L": ((1, 1), (0, 1)), "R": ((1, 0), (1, 1))}

        def mat_of(word):
            a, b, c, d = 1, 0, 0, 1
            for ch in word:
                (p, q), (r, t) = mats[ch]
                a, b, c, d = a * p + b * r, a * q + b * t, c * p + d * r, c * q + d * t
            return a, b, c, d

        for _ in range(50):
            word = "".join(rng.choice("LR") for _ in range(rng.randint(2, 10)))
            conj = "".join(rng.choice("LR") for _ in range(rng.randint(1, 5)))
            a, b, c, d = mat_of(word)
            p, q, r, t = mat_of(conj)
            # inverse of the (det 1) conjugator is its adjugate
            pi, qi, ri, ti = t, -q, -r, p
            x = (p * a + q * c, p * b + q * d, r * a + t * c, r * b + t * d)
            y = (
                x[0] * pi + x[1] * ri,
                x[0] * qi + x[1] * ti,
                x[2] * pi + x[3] * ri,
                x[2] * qi + x[3] * ti,
            )
            assert y[0] + y[3] == a + d


class TestEnumeration:
    def test_minimal_spectrum(self):
        spectrum = enumerate_spectrum(3)
        assert spectrum.class_count == 1
        cls = spectrum.classes[0]
        assert cls.word == "LR" and cls.trace == 3
        assert abs(cls.length - 1.9248473002384139) < 1e-12

    def test_trace_four(self):
        spectrum = enumerate_spectrum(4)
        assert {c.word for c in spectrum.classes} == {"LR", "LLR", "LRR"}
        assert spectrum.mult(3) == 1 and spectrum.mult(4) == 2

    def test_trace_six(self):
        spectrum = enumerate_spectrum(6)
        assert spectrum.mult(5) == 2
        words5 = {c.word for c in spectrum.classes if c.trace == 5}
        assert words5 == {"LLLR", "LRRR"}
        assert spectrum.mult(6) >= 2
        words6 = {c.word for c in spectrum.classes if c.trace == 6}
        assert {"LLRR", "LLLLR"} <= words6

    @pytest.mark.parametrize("max_trace", [3, 5, 8, 10, 12, 13])
    def test_matches_brute_force(self, max_trace):
        spectrum = enumerate_spectrum(max_trace)
        oracle = brute_force_classes(max_trace)
        assert {c.word: c.trace for c in spectrum.classes} == oracle

    def test_classes_sorted(self):
        spectrum = enumerate_spectrum(12)
        keys = [(c.trace, c.word) for c in spectrum.classes]
        assert keys == sorted(keys)

    def test_min_trace_at_each_length(self):
        # underpins the completeness cutoff: min trace at length ell is ell+1
        for ell in range(2, 13):
            best = min(
                trace_of_word(w)
                for w in ("".join(b) for b in itertools.product("LR", repeat=ell))
                if len(set(w)) > 1 and (w + w).find(w, 1) == len(w)
            )
            assert best == ell + 1

    def test_lengths_strictly_increasing(self):
        spectrum = enumerate_spectrum(30)
        lengths = [sh.length for sh in spectrum.shells]
        assert all(a < b for a, b in zip(lengths, lengths[1:]))

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            enumerate_spectrum(60, max_classes=10)

    def test_min_trace_validation(self):
        with pytest.raises(ValueError):
            enumerate_spectrum(2)


class TestNecklaceCount:
    def test_small_values(self):
        assert necklace_count(2) == 1  # {LR}
        assert necklace_count(3) == 2  # {LLR, LRR}
        assert necklace_count(6) == 9  # (64 - 8 - 4 + 2)/6

    def test_exhaustive_match(self):
        for ell in range(2, 13):
            seen = set()
            for bits in itertools.product("LR", repeat=ell):
                word = "".join(bits)
                if len(set(word)) < 2:
                    continue
                if (word + word).find(word, 1) != len(word):
                    continue
                seen.add(canonical_rotation(word))
            assert necklace_count(ell) == len(seen)

    def test_rejects_short(self):
        with pytest.raises(ValueError):
            necklace_count(1)


class TestCache:
    def test_round_trip(self, tmp_path):
        spectrum = enumerate_spectrum(15)
        path = tmp_path / "spec.csv"
        write_cache(spectrum, path)
        loaded = read_cache(path, 15)
        assert loaded is not None
        assert loaded.classes is None
        assert loaded.shells == spectrum.shells
        assert loaded.max_trace == 15 and loaded.group_label == "modular"

    def test_metadata_mismatch_rejected(self, tmp_path):
        spectrum = enumerate_spectrum(15)
        path = tmp_path / "spec.csv"
        write_cache(spectrum, path)
        assert read_cache(path, 16) is None
        assert read_cache(path, 15, group_label="other") is None

    def test_corrupt_metadata_rejected(self, tmp_path):
        spectrum = enumerate_spectrum(10)
        path = tmp_path / "spec.csv"
        write_cache(spectrum, path)
        meta = path.with_name(path.name + ".meta.json")
        meta.write_text(meta.read_text().replace('"1"', '"0"'))
        assert read_cache(path, 10) is None

    def test_missing_sidecar_rejected(self, tmp_path):
        spectrum = enumerate_spectrum(10)
        path = tmp_path / "spec.csv"
        write_cache(spectrum, path)
        path.with_name(path.name + ".meta.json").unlink()
        assert read_cache(path, 10) is None

    def test_header_checked(self, tmp_path):
        path = tmp_path / "spec.csv"
        write_cache(enumerate_spectrum(10), path)
        body = path.read_text().splitlines()
        body[0] = "trace,count,norm,length"
        path.write_text("\n".join(body) + "\n")
        assert read_cache(path, 10) is None

    def test_generator_convention_recorded(self, tmp_path):
        path = tmp_path / "spec.csv"
        write_cache(enumerate_spectrum(10), path)
        meta = path.with_name(path.name + ".meta.json").read_text()
        assert GENERATOR_CONVENTION in meta


class TestSpectrumContainer:
    def test_mult_of_absent_trace(self):
        spectrum = enumerate_spectrum(10)
        assert spectrum.mult(1000) == 0

    def test_min_length(self):
        assert abs(enumerate_spectrum(5).min_length - 2.0 * math.acosh(1.5)) < 1e-15

    def test_empty_spectrum_min_length(self):
        empty = LengthSpectrum(shells=(), max_trace=3)
        assert empty.min_length == math.inf
