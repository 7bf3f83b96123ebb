"""Exit criteria, one test per criterion; each prints its own pass/fail line."""

import pytest

from kjuggle.acceptance import CRITERIA


@pytest.mark.parametrize("key,title,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(key, title, check):
    ok, detail = check()
    print(f"{'PASS' if ok else 'FAIL'}  {key}: {title} [{detail}]")
    assert ok, f"{key}: {title} [{detail}]"
