"""Acceptance gate: every promised criterion at its stated bound.

Each criterion prints one PASS/FAIL line; run with -s to watch them stream.
The same functions back the `lierep selftest` command.
"""

import pytest

from lierep.selfcheck import CRITERIA


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn, capsys):
    try:
        detail = fn()
    except Exception as exc:  # noqa: BLE001 - report, then fail the gate
        with capsys.disabled():
            print(f"FAIL {name}: {exc}")
        raise
    with capsys.disabled():
        print(f"PASS {name}: {detail}")
