import numpy as np
import pytest

from udc.channel import ChannelError, corrupt, random_message, simulate
from udc.fields import make_field
from udc.schemes import RowSelection, derive_code, fourier_scheme


def test_corrupt_error_statistics():
    f = make_field(257)
    rng = np.random.default_rng(0)
    word = np.zeros(100_000, dtype=np.int64)
    received, errors = corrupt(f, word, 0.05, rng)
    flips = int(np.count_nonzero(errors))
    assert abs(flips / word.size - 0.05) < 0.005  # ~ +/- 7 sigma
    # every hit position actually changed, errors are the difference
    assert np.array_equal(received, errors)  # word was zero
    assert np.all(errors[errors != 0] >= 1)
    assert np.all(errors < 257)
    # hit values are roughly uniform over 1..256
    vals, counts = np.unique(errors[errors != 0], return_counts=True)
    assert vals.size > 200
    assert counts.max() < 3.5 * counts.min() + 50


def test_corrupt_always_changes_hit_symbols():
    f = make_field(2, 4)  # xor addition: nonzero shift always flips
    rng = np.random.default_rng(1)
    word = f.random_elements(rng, 5000)
    received, errors = corrupt(f, word, 0.3, rng)
    hits = errors != 0
    assert np.all(received[hits] != word[hits])
    assert np.array_equal(received[~hits], word[~hits])
    assert np.array_equal(f.sub(received, word), errors)


def test_corrupt_edge_rates():
    f = make_field(29)
    rng = np.random.default_rng(2)
    word = f.random_elements(rng, 100)
    same, e0 = corrupt(f, word, 0.0, rng)
    assert np.array_equal(same, word) and not np.any(e0)
    _, e1 = corrupt(f, word, 1.0, rng)
    assert np.all(e1 != 0)
    with pytest.raises(ChannelError):
        corrupt(f, word, 1.5, rng)


def test_random_message_range():
    f = make_field(2, 8)
    rng = np.random.default_rng(3)
    m = random_message(f, 1000, rng)
    assert m.min() >= 0 and m.max() < 256


def _small_sim_code():
    return derive_code(fourier_scheme(make_field(29), 7), RowSelection(0, 1, 3))


def test_simulate_is_reproducible():
    code = _small_sim_code()
    a = simulate(code, 0.1, trials=200, seed=9)
    b = simulate(code, 0.1, trials=200, seed=9)
    assert a.as_dict() == b.as_dict()
    c = simulate(code, 0.1, trials=200, seed=10)
    assert a.as_dict() != c.as_dict()


def test_simulate_counts_are_consistent():
    code = _small_sim_code()
    res = simulate(code, 0.15, trials=500, seed=4, keep_weights=True)
    assert res.trials == 500
    assert res.successes + res.flagged_failures + res.miscorrections == 500
    assert res.within_capability + res.beyond_capability == 500
    assert res.failures == res.flagged_failures + res.miscorrections
    assert res.failure_rate == pytest.approx(res.failures / 500)
    assert len(res.error_weights) == 500
    within = sum(1 for w in res.error_weights if w <= code.t)
    assert within == res.within_capability
    # every within-capability trial decoded correctly
    assert res.capability_violations == 0
    d = res.as_dict()
    assert d["failures"] == res.failures
    assert d["max_error_weight"] == max(res.error_weights)


def test_simulate_clean_channel_never_fails():
    code = _small_sim_code()
    res = simulate(code, 1e-9, trials=50, seed=5)
    assert res.successes == 50 and res.failures == 0


def test_simulate_hostile_channel_mostly_fails():
    code = _small_sim_code()
    res = simulate(code, 0.75, trials=60, seed=6)
    assert res.beyond_capability > 40
    assert res.failures > 30
    assert res.capability_violations == 0


def test_simulate_validates():
    code = _small_sim_code()
    with pytest.raises(ChannelError):
        simulate(code, 0.1, trials=0)
