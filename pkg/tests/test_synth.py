import pytest

from epirules import SplitMix64, SyntheticSpec, generate_synthetic


class TestSplitMix64:
    def test_reference_vector_seed_zero(self):
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_reference_vector_seed_1234567(self):
        rng = SplitMix64(1234567)
        assert rng.next_u64() == 0x599ED017FB08FC85

    def test_float_range(self):
        rng = SplitMix64(99)
        for _ in range(1000):
            assert 0.0 <= rng.next_float() < 1.0


class TestGenerateSynthetic:
    def test_deterministic(self):
        spec = SyntheticSpec(5, 3, 1, 1, seed=77)
        assert generate_synthetic(spec) == generate_synthetic(spec)

    def test_seed_changes_output(self):
        a = generate_synthetic(SyntheticSpec(50, 5, 2, 4, seed=1))
        b = generate_synthetic(SyntheticSpec(50, 5, 2, 4, seed=2))
        assert a != b

    def test_forced_planting(self):
        spec = SyntheticSpec(
            4, 3, 1, 1, planted_query=(1, 2), plant_rate=1.0, seed=5
        )
        seq = generate_synthetic(spec)
        for t in range(1, 4):
            assert 1 in seq.events_at(t)
            assert 2 in seq.events_at(t + 1)

    def test_mean_slot_size(self):
        spec = SyntheticSpec(100_000, 100, 5, 50, seed=3)
        seq = generate_synthetic(spec)
        mean = sum(len(seq.events_at(t)) for t in range(1, seq.end_time + 1)) / seq.end_time
        assert 4.5 <= mean <= 5.5

    def test_invalid_spec(self):
        with pytest.raises(ValueError):
            SyntheticSpec(10, 3, 4, 2).validate()
        with pytest.raises(ValueError):
            SyntheticSpec(10, 3, 1, 1, plant_rate=1.5).validate()
