"""Cardinality arithmetic and the bound audit."""

from fractions import Fraction

import pytest

from picodes.counting import (
    BoundAudit,
    CountReport,
    audit_bounds,
    closed_counts,
    lower_bound_formula,
    upper_bound,
)
from picodes.errors import SizeTooSmall, WorkLimitExceeded
from picodes.words import SuffixMode

from conftest import DESK_SIZES, members


def test_upper_bound_values():
    assert upper_bound(4, 4) == Fraction(65536, 7)
    assert upper_bound(4, 5) == Fraction(2 ** 20, 9)
    assert upper_bound(5, 4) == Fraction(2 ** 20, 9)
    assert upper_bound(5, 5) == Fraction(2 ** 25, 9)
    assert upper_bound(2, 2, q=3) == Fraction(81, 3)
    assert upper_bound(1, 1) == Fraction(2, 1)


def test_upper_bound_guards():
    with pytest.raises(SizeTooSmall):
        upper_bound(0, 4)
    with pytest.raises(ValueError):
        upper_bound(4, 4, q=1)


def test_lower_bound_values():
    assert lower_bound_formula(4, 4) == 18
    assert lower_bound_formula(4, 5) == 54
    assert lower_bound_formula(5, 4) == 196
    assert lower_bound_formula(5, 5) == 1372
    with pytest.raises(SizeTooSmall):
        lower_bound_formula(3, 4)


def test_count_report_text_and_agreement():
    hit = CountReport("I", 4, 4, 3, 3)
    miss = CountReport("I", 4, 4, 3, 2)
    open_ended = CountReport("upper-bound", 4, 4, Fraction(65536, 7), None)
    assert hit.agree is True and miss.agree is False and open_ended.agree is None
    assert hit.to_text() == "id=I m=4 n=4 closed=3 enumerated=3 agree=yes"
    assert miss.to_text().endswith("agree=no")
    assert open_ended.to_text() == ("id=upper-bound m=4 n=4 "
                                    "closed=65536/7 enumerated=- agree=-")


def test_closed_counts_agree_under_the_proper_reading():
    for rid, rep in zip(("I", "L", "Z", "Z-product"),
                        closed_counts(4, 4, SuffixMode.PROPER)):
        assert rep.report_id == rid
        assert rep.agree is True
    z = closed_counts(4, 4, SuffixMode.PROPER)[2]
    assert (z.closed, z.enumerated) == (18, 18)


def test_closed_counts_disagree_under_the_default_reading():
    i, l, z, prod = closed_counts(4, 4)
    assert (i.closed, i.enumerated) == (3, 2) and i.agree is False
    assert (l.closed, l.enumerated) == (2, 1) and l.agree is False
    assert (z.closed, z.enumerated) == (18, 4) and z.agree is False
    assert (prod.closed, prod.enumerated) == (4, 4) and prod.agree is True


@pytest.mark.parametrize("size", DESK_SIZES)
@pytest.mark.parametrize("mode", SuffixMode)
def test_product_law_holds_in_every_mode(size, mode):
    prod = closed_counts(*size, mode)[3]
    assert prod.agree is True


@pytest.mark.parametrize("size", DESK_SIZES)
def test_audit_chain_on_enumerated_counts(size):
    audit = audit_bounds(*size)
    assert audit.chain_z_le_y and audit.chain_y_le_upper
    by_id = {r.report_id: r for r in audit.reports}
    assert by_id["X"].agree is True
    assert by_id["Y"].enumerated == len(members("Y", *size))
    assert by_id["Z"].enumerated == len(members("Z", *size))
    assert by_id["upper-bound"].closed == upper_bound(*size)


def test_audit_closed_lower_bound_flags():
    assert audit_bounds(4, 4).closed_lower_holds is False
    assert audit_bounds(4, 5).closed_lower_holds is False
    assert audit_bounds(5, 4).closed_lower_holds is True
    assert audit_bounds(5, 5).closed_lower_holds is True


def test_audit_text_shape():
    text = audit_bounds(4, 4).to_text().splitlines()
    assert text[0].startswith("id=X ")
    assert text[-3] == "chain |Z| <= |Y|: holds"
    assert text[-2] == "chain |Y| <= upper: holds"
    assert text[-1] == "closed lower bound <= |Y|: fails"


def test_audit_respects_work_limit():
    with pytest.raises(WorkLimitExceeded):
        audit_bounds(5, 5, work_limit=100)
    assert isinstance(audit_bounds(4, 4), BoundAudit)
