"""Smoke tests for the ocseq extension module."""

import pytest

import ocseq


def test_oc_fixtures():
    assert ocseq.compute_oc_sequence("abcab") == "10011"
    assert ocseq.compute_oc_sequence("abaaab") == "101001"
    assert ocseq.compute_oc_sequence("abcaacab") == "10010001"
    assert ocseq.compute_border_array("abcaacab") == [0, 0, 0, 1, 1, 0, 1, 2]


def test_word_predicates():
    assert ocseq.is_closed("abca")
    assert not ocseq.is_closed("aaba")
    assert ocseq.period("aabaab") == 3
    assert ocseq.exponent("ababa") == (5, 2)
    assert ocseq.longest_border("abcaacab") == "ab"
    assert ocseq.closed_extension("ab", "ab") == "a"
    assert ocseq.closed_extension("aab", "ab") is None
    assert ocseq.complete_return_root("aabaab") == "aab"
    assert ocseq.complete_return_root("aaba") is None


def test_runs():
    assert ocseq.runs("110011110000111") == [(1, 2), (0, 2), (1, 4), (0, 4), (1, 3)]
    assert ocseq.check_run_inequality("10011")
    assert not ocseq.check_run_inequality("110100")


def test_generation():
    assert ocseq.standard_prefix([2, 2, 1], 15) == "aabaabaaabaabaa"
    assert ocseq.standard_prefix([1], 21) == "abaababaabaababaababa"
    assert ocseq.standard_words([1], 3) == ["b", "a", "ab", "aba", "abaab"]
    assert ocseq.standard_cores([1], 5) == ["", "a", "aba", "abaaba", "abaababaaba"]
    assert ocseq.oc_closed_form([2, 2, 1], 15) == "110011110000111"
    assert ocseq.run_lengths_closed_form([1], 6) == [1, 1, 2, 3, 5, 8]
    assert ocseq.continuant([]) == 1
    assert ocseq.continuant([1, 2, 1]) == 4
    assert ocseq.continuant([1] * 93) == 19740274219868223167


def test_structure():
    assert ocseq.semicentral_prefixes([2, 2, 1], 15) == ["aaba", "aabaabaaabaa"]
    assert ocseq.central_prefixes([2, 2, 1], 8) == ["", "a", "aa", "aabaa", "aabaabaa"]
    assert ocseq.run_boundaries([2, 2, 1], 15) == [
        (3, "closed->open"),
        (5, "open->closed"),
        (9, "closed->open"),
        (13, "open->closed"),
    ]
    head, halves = ocseq.square_factorization([1], 4)
    assert head == "ab"
    assert halves == ["a", "ba", "aba", "baaba"]


def test_predicates():
    assert ocseq.is_balanced("aaba")
    assert not ocseq.is_balanced("aabb")
    assert ocseq.is_central("aabaa")
    assert ocseq.is_semicentral("aaba")
    assert ocseq.is_left_special_sturmian("ab")
    assert ocseq.is_standard_oc_shape("110011110000111")
    record = ocseq.classify("aba")
    assert record["central"] is True
    assert record["closed"] is True
    assert record["period"] == 2
    ternary = ocseq.classify("abcab")
    assert ternary["balanced"] is None
    assert ternary["oc"] == "10011"


def test_reconstruct():
    assert ocseq.reconstruct("1100") == "aaba"
    assert ocseq.reconstruct("101001") == "abaaab"
    with pytest.raises(ValueError):
        ocseq.reconstruct("0")
    with pytest.raises(ValueError):
        ocseq.reconstruct("110100")
    assert ocseq.validate_roundtrip("101001", "abaaab")
    assert not ocseq.validate_roundtrip("1100", "aabb")


def test_roundtrip_small():
    from itertools import product

    for n in range(1, 11):
        for bits in product("ab", repeat=n - 1):
            word = "a" + "".join(bits)
            if not ocseq.is_balanced(word):
                continue
            assert ocseq.reconstruct(ocseq.compute_oc_sequence(word)) == word


def test_census():
    report = ocseq.uniqueness_census(8)
    assert report["violations"] == []
    assert len(report["classes_per_length"]) == 8
