"""Tests for the piggyback channel: embed, channel, receive, recover."""

import numpy as np
import pytest

from piggyqec.pauli import PauliOperator, enumerate_paulis, multiply
from piggyqec.psc import (
    ChannelModel,
    PiggybackConfig,
    apply_channel,
    embed,
    infer_channel_error,
    make_config,
    receive,
    roundtrip,
)
from piggyqec.reed_solomon import rs_for_quantum_code
from piggyqec.stabilizer import Syndrome, build_coset_table, get_code, measure_syndrome

P = PauliOperator.from_string


@pytest.fixture(scope="module")
def rep_config():
    return make_config(get_code("[[3,1]]"))


@pytest.fixture(scope="module")
def five_config():
    return make_config(get_code("[[5,1]]"))


class TestConfig:
    def test_rs_field_must_match(self):
        code = get_code("[[5,1]]")
        with pytest.raises(ValueError):
            PiggybackConfig(code=code, table=build_coset_table(code),
                            rs=rs_for_quantum_code(6, 23))

    def test_channel_validation(self):
        with pytest.raises(ValueError):
            ChannelModel("depolarizing", 1.5)
        with pytest.raises(ValueError):
            ChannelModel("amplitude-damping", 0.1)


class TestEmbed:
    def test_symbol_zero_is_identity(self, rep_config):
        assert embed(rep_config, 0).is_identity

    def test_documented_pairing(self, rep_config):
        assert embed(rep_config, Syndrome((-1, 1)).symbol) == P("XII")
        assert embed(rep_config, Syndrome((1, -1)).symbol) == P("IIX")

    def test_embedded_operator_reproduces_symbol(self, five_config):
        for symbol in range(16):
            p = embed(five_config, symbol)
            assert measure_syndrome(five_config.code, p).symbol == symbol

    def test_out_of_range(self, rep_config):
        with pytest.raises(ValueError):
            embed(rep_config, 4)
        with pytest.raises(ValueError):
            embed(rep_config, -1)


class TestApplyChannel:
    def test_noiseless_always_identity(self):
        rng = np.random.default_rng(0)
        model = ChannelModel("noiseless")
        for _ in range(100):
            assert apply_channel(model, 5, rng).is_identity

    def test_p_zero_always_identity(self):
        rng = np.random.default_rng(0)
        model = ChannelModel("depolarizing", 0.0)
        for _ in range(100):
            assert apply_channel(model, 5, rng).is_identity

    def test_p_one_single_qubit_frequencies(self):
        """At p_d = 1 each letter appears with frequency 1/3 within 3 sigma."""
        rng = np.random.default_rng(123)
        model = ChannelModel("depolarizing", 1.0)
        draws = 100_000
        counts = {"X": 0, "Y": 0, "Z": 0}
        for _ in range(draws):
            op = apply_channel(model, 1, rng)
            counts[op.to_string()] += 1
        sigma = (draws * (1 / 3) * (2 / 3)) ** 0.5
        for letter in "XYZ":
            assert abs(counts[letter] - draws / 3) <= 3 * sigma

    def test_per_qubit_marginal(self):
        """Each qubit is hit independently with probability p_d."""
        rng = np.random.default_rng(7)
        model = ChannelModel("depolarizing", 0.3)
        draws = 20_000
        n = 4
        hit_counts = np.zeros(n)
        for _ in range(draws):
            op = apply_channel(model, n, rng)
            support = op.x_bits | op.z_bits
            for q in range(n):
                hit_counts[q] += (support >> q) & 1
        sigma = (draws * 0.3 * 0.7) ** 0.5
        assert np.all(np.abs(hit_counts - draws * 0.3) <= 4 * sigma)


class TestReceive:
    def test_noiseless_measures_sent_syndrome(self, rep_config):
        for symbol in range(4):
            p = embed(rep_config, symbol)
            assert receive(rep_config, p).symbol == symbol

    def test_composite_error_syndrome(self, rep_config):
        """P=XII with channel error IXI: signs multiply to (+1,-1)."""
        state = multiply(P("IXI"), P("XII"))
        assert receive(rep_config, state).signs == (1, -1)

    def test_stabilizer_channel_error_invisible(self, five_config):
        """A channel error inside the stabilizer group leaves S(P) intact."""
        g = five_config.code.generators[2]
        for symbol in range(16):
            p = embed(five_config, symbol)
            assert receive(five_config, multiply(g, p)).symbol == symbol


class TestInferChannelError:
    def test_no_error_inferred_when_syndromes_agree(self, rep_config):
        s = Syndrome((-1, 1))
        e_hat, p_hat = infer_channel_error(rep_config, s, s)
        assert e_hat.is_identity
        assert p_hat == P("XII")

    def test_documented_case(self, rep_config):
        measured = Syndrome((1, -1))
        decoded = Syndrome((-1, 1))
        e_hat, p_hat = infer_channel_error(rep_config, measured, decoded)
        assert e_hat == P("IXI")   # channel syndrome (-1,-1)
        assert p_hat == P("XII")

    def test_trivial_decoded_reduces_to_plain_qecc(self, rep_config):
        measured = Syndrome((-1, -1))
        decoded = Syndrome((1, 1))
        e_hat, p_hat = infer_channel_error(rep_config, measured, decoded)
        assert p_hat.is_identity
        assert e_hat == P("IXI")


class TestRoundtrip:
    def test_noiseless_error_free(self, five_config):
        rng = np.random.default_rng(0)
        symbols = rng.integers(0, 16, size=200).tolist()
        records = roundtrip(five_config, ChannelModel("noiseless"), symbols, rng)
        assert len(records) == 200
        for rec in records:
            assert rec.decoded.symbol == rec.sent_symbol
            assert rec.measured.symbol == rec.sent_symbol
            assert rec.residual_class == "stabilizer"
            assert not rec.decode_failed

    def test_identity_channel_error_gives_identity_residual(self, five_config):
        rng = np.random.default_rng(1)
        model = ChannelModel("depolarizing", 0.05)
        symbols = rng.integers(0, 16, size=500).tolist()
        records = roundtrip(five_config, model, symbols, rng)
        for rec in records:
            if rec.channel_error.is_identity:
                recovery = multiply(
                    five_config.table[rec.decoded.symbol],
                    five_config.table[rec.inferred_channel_syndrome.symbol],
                )
                residual = multiply(
                    recovery, multiply(rec.channel_error, rec.intentional)
                )
                assert residual.is_identity

    def test_single_error_corrupts_nonzero_symbol(self, five_config):
        """A weight-1 channel error flips the measured symbol, constructed
        explicitly from the syndrome table."""
        symbol = 11
        p = embed(five_config, symbol)
        e = P("IIXII")
        measured = receive(five_config, multiply(e, p))
        expected = measure_syndrome(five_config.code, e).hadamard(
            measure_syndrome(five_config.code, p)
        )
        assert measured.signs == expected.signs
        assert measured.symbol != symbol  # piggyback symbol corrupted

    def test_measured_is_hadamard_of_parts(self, rep_config, five_config):
        """measured = S(E) o S(P) for all leaders P and all E of weight <= 2."""
        for config in (rep_config, five_config):
            code = config.code
            for p in config.table.leaders:
                sp = measure_syndrome(code, p)
                for e in enumerate_paulis(code.n, 2):
                    se = measure_syndrome(code, e)
                    assert receive(config, multiply(e, p)).signs == se.hadamard(sp).signs

    def test_corruption_independent_of_sent_symbol(self, five_config):
        """{measured != sent} happens iff S(E) is nontrivial, whatever the
        symbol; empirical corruption rates agree across symbols."""
        rng = np.random.default_rng(42)
        model = ChannelModel("depolarizing", 0.08)
        per_symbol = {s: [0, 0] for s in range(16)}
        symbols = rng.integers(0, 16, size=30_000).tolist()
        records = roundtrip(five_config, model, symbols, rng)
        for rec in records:
            corrupted = rec.measured.symbol != rec.sent_symbol
            nontrivial = not measure_syndrome(
                five_config.code, rec.channel_error
            ).is_trivial
            assert corrupted == nontrivial
            per_symbol[rec.sent_symbol][0] += corrupted
            per_symbol[rec.sent_symbol][1] += 1
        rates = [c / t for c, t in per_symbol.values() if t > 300]
        overall = sum(c for c, _ in per_symbol.values()) / len(records)
        sigma = (overall * (1 - overall) / (len(records) / 16)) ** 0.5
        for rate in rates:
            assert abs(rate - overall) <= 4 * sigma

    def test_psc_rate_below_any_error_rate(self, five_config):
        """Pr{measured != sent} <= Pr{E != I} = 1-(1-p_d)^n, within 3 sigma."""
        rng = np.random.default_rng(5)
        model = ChannelModel("depolarizing", 0.04)
        trials = 40_000
        symbols = rng.integers(0, 16, size=trials).tolist()
        records = roundtrip(five_config, model, symbols, rng)
        corrupted = sum(r.measured.symbol != r.sent_symbol for r in records)
        p_hat = corrupted / trials
        bound = 1 - (1 - 0.04) ** 5
        sigma = (bound * (1 - bound) / trials) ** 0.5
        assert p_hat <= bound + 3 * sigma

    def test_exact_leader_error_recovers_exactly(self, catalog, coset_tables):
        """When decoding succeeds and E is its own coset leader, recovery is
        exact: exhaustive over weight-1 errors on all builtin codes."""
        for name, code in catalog.items():
            config = PiggybackConfig(code=code, table=coset_tables[name])
            letters = "X" if name == "[[3,1]]" else "XYZ"
            for symbol in range(code.num_syndromes):
                p = embed(config, symbol)
                for qubit in range(code.n):
                    for letter in letters:
                        e = P("".join(letter if i == qubit else "I"
                                      for i in range(code.n)))
                        if config.table[measure_syndrome(code, e).symbol] != e:
                            continue  # degenerate coset: a different leader
                        measured = receive(config, multiply(e, p))
                        decoded = Syndrome.from_symbol(
                            symbol, config.symbols_per_codeword
                        )
                        e_hat, p_hat = infer_channel_error(config, measured, decoded)
                        residual = multiply(
                            multiply(p_hat, e_hat), multiply(e, p)
                        )
                        assert residual.is_identity

    def test_rs_roundtrip_corrects_noisy_blocks(self):
        config = make_config(get_code("[[7,1]]"), rs=rs_for_quantum_code(6, 23))
        rng = np.random.default_rng(3)
        model = ChannelModel("depolarizing", 0.01)
        message = rng.integers(0, 64, size=23 * 4).tolist()
        records = roundtrip(config, model, message, rng)
        assert len(records) == 63 * 4
        # at p_d = 0.01 the corruption rate ~0.068 is far below T/N; every
        # block decodes and every decoded symbol matches the sent one
        assert all(r.decoded.symbol == r.sent_symbol for r in records)
        assert not any(r.decode_failed for r in records)
        # sent symbols are the RS-encoded message blocks (systematic tail)
        block = [r.sent_symbol for r in records[:63]]
        assert block[2 * config.rs.T:] == message[:23]

    def test_rs_message_length_validated(self):
        config = make_config(get_code("[[7,1]]"), rs=rs_for_quantum_code(6, 23))
        rng = np.random.default_rng(0)
        with pytest.raises(ValueError):
            roundtrip(config, ChannelModel("noiseless"), [0] * 24, rng)

    def test_decode_failure_falls_back_to_measured(self):
        """A hopeless block is recorded as failed and passed through."""
        config = make_config(get_code("[[7,1]]"), rs=rs_for_quantum_code(6, 23))
        rng = np.random.default_rng(9)
        model = ChannelModel("depolarizing", 0.45)  # ~96% corruption
        message = rng.integers(0, 64, size=23).tolist()
        records = roundtrip(config, model, message, rng)
        assert any(r.decode_failed for r in records)
        for rec in records:
            if rec.decode_failed:
                assert rec.decoded.symbol == rec.measured.symbol
                assert rec.inferred_channel_syndrome.is_trivial

    def test_deterministic_given_seed(self, five_config):
        model = ChannelModel("depolarizing", 0.1)
        symbols = list(range(16)) * 10
        a = roundtrip(five_config, model, symbols, np.random.default_rng(17))
        b = roundtrip(five_config, model, symbols, np.random.default_rng(17))
        assert [(r.sent_symbol, str(r.channel_error), r.residual_class) for r in a] == \
               [(r.sent_symbol, str(r.channel_error), r.residual_class) for r in b]
