import json
import random
from dataclasses import replace

import pytest

from vancoh import (Branch, CurveComponent, SpecialPoint, Submodule, branch_kernel,
                    matrix, parse_configuration, serialize_configuration,
                    slice_degree_map, validate)
from vancoh.corpus import bundled
from vancoh.linalg import IntegerMatrix

from helpers import random_valid_config


def load_corpus(name):
    doc = json.loads(dict(bundled())[name].read_text())
    result = parse_configuration(doc)
    assert result.configuration is not None and not result.violations
    return result.configuration


class TestSliceDegreeMap:
    @pytest.mark.parametrize("args,expected", [((3, 2), (3, 1)), ((7, 4), (5, 3)), ((5, 2), (5, 3))])
    def test_values(self, args, expected):
        assert slice_degree_map(*args) == expected

    @pytest.mark.parametrize("args", [(3, 1), (2, 2), (4, 4), (3, 5)])
    def test_preconditions(self, args):
        with pytest.raises(ValueError):
            slice_degree_map(*args)


class TestBranchKernel:
    def test_identity(self):
        assert branch_kernel(Branch("S", matrix([[1]]))) == Submodule.full(1)

    def test_minus_identity(self):
        assert branch_kernel(Branch("S", matrix([[-1]]))) == Submodule.zero(1)

    def test_shear(self):
        k = branch_kernel(Branch("S", matrix([[1, 1], [0, 1]])))
        assert k.basis.tolist() == [[1], [0]]

    def test_deterministic(self):
        b = Branch("S", matrix([[1, 2], [0, -1]]))
        assert branch_kernel(b) == branch_kernel(b)


class TestValidate:
    def test_corpus_is_valid(self):
        for name, _ in bundled():
            assert validate(load_corpus(name)) == []

    def test_random_configs_valid(self):
        rng = random.Random(20)
        for _ in range(25):
            cfg = random_valid_config(rng)
            assert validate(cfg) == []
            # injectivity of iota forces the rank inequality at every point
            for q in cfg.special_points:
                assert q.fq_rank_low <= sum(branch_kernel(b).rank for b in q.branches)

    def test_determinant_two_loop(self):
        cfg = load_corpus("xyz")
        bad = cfg.components[0]
        comps = (CurveComponent(bad.id, bad.genus, bad.transversal_rank,
                                (matrix([[2]]),)),) + cfg.components[1:]
        violations = validate(replace(cfg, components=comps))
        assert [v.code for v in violations] == ["loop-not-unimodular"]

    def test_iota_with_kernel(self):
        cfg = load_corpus("xyz")
        q = cfg.special_points[0]
        repeated = matrix([[1, 1], [-1, -1], [0, 0]])  # rank 1 < fq_rank_low
        points = (SpecialPoint(q.id, q.branches, q.fq_rank_low, q.fq_rank_high,
                               repeated, q.costalk_rank),)
        violations = validate(replace(cfg, special_points=points))
        assert [v.code for v in violations] == ["iota-not-injective"]

    def test_loop_count_mismatch(self):
        cfg = load_corpus("quadric_power_2_2")
        c = cfg.components[0]
        comps = (CurveComponent(c.id, c.genus, c.transversal_rank, (matrix([[1]]),)),)
        violations = validate(replace(cfg, components=comps))
        assert [v.code for v in violations] == ["loop-count"]

    def test_dimension_reduction(self):
        cfg = load_corpus("xyz")
        broken = replace(cfg, n=4)
        assert "dimension-reduction" in [v.code for v in validate(broken)]

    def test_duplicate_and_unknown_ids(self):
        cfg = load_corpus("xyz")
        q = cfg.special_points[0]
        points = (SpecialPoint(q.id, (Branch("nope", matrix([[1]])),) + q.branches[1:],
                               q.fq_rank_low, q.fq_rank_high, q.iota, q.costalk_rank),)
        comps = cfg.components[:2] + (CurveComponent(
            cfg.components[0].id, 0, 1, (matrix([[1]]),)),)
        codes = [v.code for v in validate(replace(
            cfg, components=comps, special_points=points, isolated_points=()))]
        assert "duplicate-id" in codes
        assert "unknown-component" in codes

    def test_polar_data_checks(self):
        cfg = load_corpus("quadric_power_2_2")
        assert validate(replace(cfg, polar_data=((3, 1), (0, 0)))) == []
        assert [v.code for v in validate(replace(cfg, polar_data=((3, -1),)))] \
            == ["polar-negative"]
        too_long = ((1, 0),) * 3  # original_s = 2 allows k = 0, 1 only
        assert [v.code for v in validate(replace(cfg, polar_data=too_long))] \
            == ["polar-length"]

    def test_idempotent(self):
        cfg = load_corpus("xyzu")
        assert validate(cfg) == validate(cfg)


class TestRoundTrip:
    def test_corpus_round_trip(self):
        for name, _ in bundled():
            cfg = load_corpus(name)
            doc = serialize_configuration(cfg)
            # through actual JSON text, as the CLI would see it
            reparsed = parse_configuration(json.loads(json.dumps(doc)))
            assert reparsed.configuration == cfg
            assert reparsed.violations == []
            assert reparsed.unknown_keys == []

    def test_random_round_trip(self):
        rng = random.Random(21)
        for _ in range(25):
            cfg = random_valid_config(rng, with_costalk=bool(rng.getrandbits(1)))
            doc = json.loads(json.dumps(serialize_configuration(cfg)))
            assert parse_configuration(doc).configuration == cfg

    def test_unknown_keys_collected(self):
        doc = serialize_configuration(load_corpus("xyz"))
        doc["favourite_color"] = "blue"
        doc["components"][0]["extra"] = 1
        result = parse_configuration(doc)
        assert sorted(result.unknown_keys) == ["components[0].extra", "favourite_color"]
        assert result.configuration is not None

    def test_malformed_document(self):
        result = parse_configuration({"n": "three"})
        assert result.configuration is None
        assert any(v.code == "malformed-document" for v in result.violations)
        assert parse_configuration([1, 2, 3]).configuration is None
        assert parse_configuration({"n": 3}).configuration is None  # missing keys

    def test_null_costalk_treated_as_absent(self):
        doc = serialize_configuration(load_corpus("xyz"))
        doc["special_points"][0]["costalk_rank"] = None
        result = parse_configuration(doc)
        assert result.violations == []
        assert result.configuration.special_points[0].costalk_rank is None

    def test_empty_iota_shapes(self):
        cfg = load_corpus("x2z_y2u")
        assert cfg.special_points[0].iota == IntegerMatrix.zeros(0, 0)
