"""Marker synthesis and classical evaluation against the DAG oracle."""

import dataclasses

import pytest

from causalgrover import (
    EQ,
    NEQ,
    ComparisonClause,
    bubble,
    chordless_cycles,
    eval_marker,
    four_eloop,
    is_acyclic,
    synthesize_marker,
    triangle,
)

from conftest import all_orientations


def comparison_table(spec):
    return [(c.pair, c.polarity) for c in spec.comparisons]


def clause_tables(spec):
    return [
        [spec.comparisons[k] for k in clause.comparisons] for clause in spec.cycles
    ]


class TestFourEloopGolden:
    """The synthesized clause structure for the wheel, frozen exactly."""

    def test_comparison_table(self):
        spec = synthesize_marker(four_eloop())
        assert comparison_table(spec) == [
            ((0, 1), EQ),
            ((0, 5), NEQ),
            ((1, 2), EQ),
            ((1, 6), NEQ),
            ((2, 3), EQ),
            ((2, 7), NEQ),
            ((3, 4), NEQ),
            ((4, 5), NEQ),
            ((4, 7), NEQ),
            ((5, 6), NEQ),
            ((6, 7), NEQ),
        ]

    def test_cycle_clauses(self):
        spec = synthesize_marker(four_eloop())
        assert clause_tables(spec) == [
            [
                ComparisonClause((0, 1), EQ),
                ComparisonClause((1, 2), EQ),
                ComparisonClause((2, 3), EQ),
            ],
            [ComparisonClause((0, 5), NEQ), ComparisonClause((4, 5), NEQ)],
            [ComparisonClause((1, 6), NEQ), ComparisonClause((5, 6), NEQ)],
            [ComparisonClause((2, 7), NEQ), ComparisonClause((6, 7), NEQ)],
            [ComparisonClause((3, 4), NEQ), ComparisonClause((4, 7), NEQ)],
        ]

    def test_marker_shape(self):
        spec = synthesize_marker(four_eloop())
        assert spec.n == 8
        assert len(spec.comparisons) == 11
        assert len(spec.cycles) == 5
        assert spec.fixed == (0, 1)


class TestSmallSpecs:
    def test_bubble(self):
        spec = synthesize_marker(bubble())
        assert comparison_table(spec) == [((0, 1), NEQ)]
        assert len(spec.cycles) == 1
        assert spec.cycles[0].comparisons == (0,)
        assert spec.fixed == (0, 1)

    def test_triangle(self):
        spec = synthesize_marker(triangle())
        assert comparison_table(spec) == [((0, 1), EQ), ((1, 2), EQ)]
        assert len(spec.cycles) == 1
        assert spec.fixed == (0, 1)

    def test_topology_fixed_is_respected(self):
        spec = synthesize_marker(dataclasses.replace(bubble(), fixed=(1, 0)))
        assert spec.fixed == (1, 0)

    def test_explicit_fixed_overrides(self):
        spec = synthesize_marker(bubble(), fixed=(1, 1))
        assert spec.fixed == (1, 1)

    def test_unconstrained_warns(self):
        with pytest.warns(UserWarning, match="M doubles"):
            spec = synthesize_marker(bubble(), fixed=None)
        assert spec.fixed is None

    def test_bad_fixed_rejected(self):
        with pytest.raises(ValueError, match="fixed edge"):
            synthesize_marker(bubble(), fixed=(7, 1))
        with pytest.raises(ValueError, match="fixed value"):
            synthesize_marker(bubble(), fixed=(0, 2))


class TestEvalMarker:
    def test_four_eloop_all_ones_unmarked(self):
        spec = synthesize_marker(four_eloop())
        assert eval_marker(spec, "1" * 8) is False  # rim clause fires

    def test_triangle_example(self):
        spec = synthesize_marker(triangle())
        assert eval_marker(spec, "110") is True

    def test_bubble_two_cycle_unmarked(self):
        spec = synthesize_marker(bubble())
        assert eval_marker(spec, "10") is False

    def test_fixed_bit_conjunct(self):
        spec = synthesize_marker(bubble())
        assert eval_marker(spec, "00") is False  # acyclic but e0 = 0

    def test_fixed_value_zero(self):
        spec = synthesize_marker(bubble(), fixed=(0, 0))
        assert eval_marker(spec, "00") is True
        assert eval_marker(spec, "11") is False

    def test_length_mismatch(self):
        spec = synthesize_marker(bubble())
        with pytest.raises(ValueError, match="length"):
            eval_marker(spec, "110")


class TestEquivalenceWithDag:
    def test_corpus_exhaustive(self, named_corpus, random_corpus):
        for topology in named_corpus + random_corpus:
            spec = synthesize_marker(topology)
            edge, value = spec.fixed
            for bits in all_orientations(topology.n):
                expected = is_acyclic(topology, bits) and bits[edge] == str(value)
                assert eval_marker(spec, bits) == expected, (topology.name, bits)

    def test_unconstrained_marks_all_acyclic(self, named_corpus):
        for topology in named_corpus:
            with pytest.warns(UserWarning):
                spec = synthesize_marker(topology, fixed=None)
            for bits in all_orientations(topology.n):
                assert eval_marker(spec, bits) == is_acyclic(topology, bits)


class TestStructuralInvariants:
    def test_determinism(self):
        a = synthesize_marker(four_eloop())
        b = synthesize_marker(four_eloop())
        assert a == b
        assert repr(a) == repr(b)

    def test_comparisons_sorted_unique_and_referenced(self, random_corpus):
        for topology in random_corpus:
            spec = synthesize_marker(topology)
            keys = [(c.pair, c.polarity) for c in spec.comparisons]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)
            assert all(i < j for (i, j), _ in keys)
            referenced = {k for clause in spec.cycles for k in clause.comparisons}
            assert referenced == set(range(len(spec.comparisons)))

    def test_clause_arity_is_cycle_length_minus_one(self, named_corpus):
        for topology in named_corpus:
            spec = synthesize_marker(topology)
            for clause in spec.cycles:
                assert len(clause.comparisons) == len(clause.cycle) - 1

    def test_clause_false_iff_cycle_uniformly_directed(self, named_corpus):
        # the length-1 consecutive comparisons imply the closing one
        for topology in named_corpus:
            spec = synthesize_marker(topology)
            for bits in all_orientations(topology.n):
                values = [c.evaluate(bits) for c in spec.comparisons]
                for clause in spec.cycles:
                    conjunction = all(values[k] for k in clause.comparisons)
                    senses = {
                        int(bits[eid]) ^ alignment
                        for eid, alignment in zip(
                            clause.cycle.edges, clause.cycle.alignments
                        )
                    }
                    assert conjunction == (len(senses) == 1)

    def test_same_cycle_set_as_topology(self, named_corpus):
        for topology in named_corpus:
            spec = synthesize_marker(topology)
            assert [c.cycle for c in spec.cycles] == chordless_cycles(topology)
