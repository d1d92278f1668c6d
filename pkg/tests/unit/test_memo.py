from __future__ import annotations

import pytest

from degseq.cli.common import CommandContext
from degseq.config.loader import load_config, load_defaults
from degseq.core.sequence import DegreeSequence
from degseq.errors import ConfigurationError
from degseq.exact.counter import GraphCounter
from degseq.memo import MemoTable


def test_unbounded_table_keeps_everything() -> None:
    table = MemoTable()
    for key in range(100):
        table.put(key, key * key)

    assert len(table) == 100
    assert table.info().evictions == 0
    assert table.info().max_entries is None


def test_bounded_table_drops_least_recently_used() -> None:
    table = MemoTable(max_entries=2)
    table.put("a", 1)
    table.put("b", 2)
    assert table.get("a") == 1

    table.put("c", 3)

    assert table.missing(table.get("b"))
    assert table.get("a") == 1
    assert table.get("c") == 3
    info = table.info()
    assert info.size == 2
    assert info.evictions == 1
    assert info.as_dict()["max_entries"] == 2


def test_clear_resets_statistics() -> None:
    table = MemoTable(max_entries=1)
    table.put("a", 1)
    table.put("b", 2)
    table.get("b")

    table.clear()

    assert table.info().as_dict() == {"hits": 0, "misses": 0, "size": 0, "evictions": 0, "max_entries": 1}


def test_table_needs_room() -> None:
    with pytest.raises(ConfigurationError):
        MemoTable(max_entries=0)


def test_counter_with_small_table_still_counts() -> None:
    counter = GraphCounter(memo=MemoTable(max_entries=8))

    assert counter.count(DegreeSequence((3,) * 8)) == 19355
    info = counter.cache_info()
    assert info.size <= 8
    assert info.evictions > 0


def test_context_sizes_the_counter_memo_from_config() -> None:
    config = load_config(overrides={"exact": {"memo_entries": 32}}, env={})
    ctx = CommandContext(config=config, defaults=load_defaults({}))

    assert ctx.oracle.counter.cache_info().max_entries == 32


def test_zero_memo_entries_means_unbounded() -> None:
    config = load_config(overrides={"exact": {"memo_entries": 0}}, env={})
    ctx = CommandContext(config=config, defaults=load_defaults({}))

    assert ctx.oracle.counter.cache_info().max_entries is None


def test_negative_memo_entries_rejected() -> None:
    with pytest.raises(ConfigurationError):
        load_config(overrides={"exact": {"memo_entries": -1}}, env={})
