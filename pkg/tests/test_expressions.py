import pytest

from egperm.catalog import get_entry, load_expression
from egperm.expressions import eval_expr, format_expr, parse_expr
from egperm.sequences import canonicalize_sign, sequence_from_row


def test_completed_one_loop_values():
    e = load_expression("completed_P_1_1.expr", calV=3)
    expected = {7: 6, 13: 5, 19: 12, 31: 27, 37: 11, 43: 8}
    for p, v in expected.items():
        assert eval_expr(e, p) == v


def test_completed_three_loop_values():
    e = load_expression("completed_P_3_1.expr", calV=5)
    expected = {11: 1, 31: 6, 41: 3}
    for p, v in expected.items():
        assert eval_expr(e, p) == v


def test_decompletion_expression_matches_stored_row():
    entry = get_entry("P_3_1")
    e = load_expression(entry.expression_file, calV=entry.calV)
    row = {p: eval_expr(e, p) for p in entry.row}
    seq = canonicalize_sign(
        sequence_from_row("expr", entry.calV, entry.calE, row))
    assert seq.residues() == entry.row_sequence().residues()


def test_format_parse_round_trip():
    for name, calV in (("P_3_1.expr", 2), ("P_6_3.expr", 2),
                       ("completed_P_3_1.expr", 5)):
        e = load_expression(name, calV=calV)
        e2 = parse_expr(format_expr(e), calV=calV)
        for p in (11, 31):
            assert eval_expr(e, p) == eval_expr(e2, p)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_expr("SUM { SIGN")
    with pytest.raises(ValueError):
        parse_expr("hello world")


def test_inadmissible_prime_rejected():
    e = load_expression("completed_P_1_1.expr", calV=3)
    with pytest.raises(ValueError):
        eval_expr(e, 5)  # 5 - 1 is not a multiple of 3
