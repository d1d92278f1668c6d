from __future__ import annotations

import pytest

from degseq.asymptotics.envelope import error_envelope
from degseq.core.sequence import DegreeSequence
from degseq.errors import PreconditionError


def test_regular_sequence_has_no_spread(regular) -> None:
    envelope = error_envelope(regular(10, 4), None)

    assert envelope.epsilon == 0
    assert envelope.eta1 == pytest.approx(1 / 40)
    assert envelope.eta2 == 0
    assert envelope.xi == 0
    assert envelope.delta == pytest.approx(0.25)
    assert envelope.regime_error is None


def test_truncation_term_and_alpha(regular) -> None:
    d = regular(100, 10)
    untruncated = error_envelope(d, None, alpha=0.5)
    truncated = error_envelope(d, 3, alpha=0.5)

    assert truncated.eta1 - untruncated.eta1 == pytest.approx(0.2**3)
    assert untruncated.epsilon == pytest.approx(10**-0.5)
    assert untruncated.regime_error is not None
    assert set(untruncated.as_dict()) == {"eta1", "eta2", "xi", "delta", "epsilon", "regime_error"}


def test_needs_positive_mean() -> None:
    with pytest.raises(PreconditionError):
        error_envelope(DegreeSequence((0, 0)), 2)
