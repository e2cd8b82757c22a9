from fedledger.ledger import VerificationFailed, IncompleteRound, ChainFormatError, codec
from fedledger.ledger.Block import NO_PARTY
from fedledger.ledger.Chain import init_chain, verify_chain, verify_upload, export_chain, import_chain, Chain

from dataclasses import replace, fields
import numpy as np
import pytest

WEIGHTS_LEN = 6


def mined_chain(num_blocks, difficulty=4, num_miners=3, seed=0, embed_payload=True):
    """ Chain of num_blocks blocks after the genesis, 3 uploads per round """
    rng = np.random.default_rng(seed)
    chain = init_chain(np.zeros(WEIGHTS_LEN), difficulty, num_miners, mining_reward=10., embed_payload=embed_payload)
    for i in range(num_blocks):
        chain.mine_block(1 + i // 3, i % num_miners, i % 3, rng.standard_normal(WEIGHTS_LEN), rng)
    return chain


class TestInitChain:

    def test_genesis(self):
        chain = init_chain(np.arange(4.), difficulty=0)

        assert len(chain) == 1
        genesis = chain.blocks[0]
        assert genesis.prev_hash == codec.ZERO_HASH
        assert genesis.miner_id == NO_PARTY and genesis.mc_id == NO_PARTY
        assert genesis.payload_digest == codec.payload_digest(genesis.payload)
        assert verify_chain(chain)

    def test_genesis_deterministic(self):
        assert init_chain(np.arange(4.)).blocks[0].hash == init_chain(np.arange(4.)).blocks[0].hash

    def test_genesis_exempt_from_pow(self):
        assert verify_chain(init_chain(np.ones(3), difficulty=64))

    def test_negative_difficulty(self):
        with pytest.raises(ValueError):
            init_chain(np.ones(3), difficulty=-1)


def test_verify_upload():
    assert verify_upload(np.ones(5), 5)
    assert not verify_upload(np.array([1., np.nan, 0., 0., 0.]), 5)
    assert not verify_upload(np.array([1., np.inf, 0., 0., 0.]), 5)
    assert not verify_upload(np.ones(4), 5)


class TestMineBlock:

    def test_difficulty_zero_first_nonce(self):
        chain = init_chain(np.zeros(3), difficulty=0)
        block = chain.mine_block(1, 0, 0, np.ones(3), np.random.default_rng(0))

        assert chain.attempts_log == [1]
        assert block.height == 1
        assert block.prev_hash == chain.blocks[0].hash
        assert block.timestamp == 1

    def test_rejected_upload(self):
        chain = init_chain(np.zeros(3), difficulty=0)

        with pytest.raises(VerificationFailed):
            chain.mine_block(1, 0, 0, np.array([0., np.nan, 0.]), np.random.default_rng(0))
        with pytest.raises(VerificationFailed):
            chain.mine_block(1, 0, 0, np.zeros(4), np.random.default_rng(0))
        assert len(chain) == 1

    def test_proof_of_work(self):
        chain = mined_chain(6, difficulty=8)

        for block in chain.blocks[1:]:
            assert block.meets_difficulty(8)
            assert block.hash.startswith('00')

    def test_mean_attempts(self):
        chain = init_chain(np.zeros(2), difficulty=8)
        rng = np.random.default_rng(123)
        for i in range(200):
            chain.mine_block(1 + i, 0, 0, rng.standard_normal(2), rng)

        assert 180 <= np.mean(chain.attempts_log) <= 360

    def test_rewards_and_broadcasts(self):
        chain = mined_chain(10, num_miners=3)

        assert chain.reward_ledger == {0: 40., 1: 30., 2: 30.}
        assert sum(chain.reward_ledger.values()) == 10. * (len(chain) - 1)
        assert chain.broadcast_log == 2 * (len(chain) - 1)
        assert chain.blocks_mined_by(0) == 4

    def test_payload_immutable(self):
        chain = mined_chain(1)

        with pytest.raises(ValueError):
            chain.blocks[1].payload[0] = 1.


class TestVerifyChain:

    def test_fresh_chain_valid(self):
        assert verify_chain(mined_chain(10))

    def test_payload_bit_flip(self):
        chain = mined_chain(10)
        payload = chain.blocks[3].payload.copy()
        payload.view(np.uint64)[0] ^= np.uint64(1)
        chain.blocks[3] = replace(chain.blocks[3], payload=payload)

        assert not verify_chain(chain)

    def test_reordered_blocks(self):
        chain = mined_chain(10)
        chain.blocks[3], chain.blocks[4] = chain.blocks[4], chain.blocks[3]

        assert not verify_chain(chain)

    def test_empty_chain(self):
        assert not Chain().verify()

    def test_single_bit_tamper_detection(self):
        chain = mined_chain(50, difficulty=2)
        rng = np.random.default_rng(7)
        names = [f.name for f in fields(chain.blocks[0])]

        for _ in range(1000):
            height = int(rng.integers(0, len(chain) - 1))
            original = chain.blocks[height]
            name = names[rng.integers(len(names))]
            value = getattr(original, name)

            if name == 'payload':
                corrupted = value.copy()
                corrupted.view(np.uint64)[rng.integers(len(corrupted))] ^= np.uint64(1) << np.uint64(rng.integers(64))
            elif isinstance(value, str):
                i = int(rng.integers(len(value)))
                corrupted = value[:i] + chr(ord(value[i]) ^ (1 << int(rng.integers(7)))) + value[i + 1:]
            else:
                corrupted = value ^ (1 << int(rng.integers(63)))

            chain.blocks[height] = replace(original, **{name: corrupted})
            assert not verify_chain(chain), 'Corrupted %s of block %d not detected' % (name, height)
            chain.blocks[height] = original

        assert verify_chain(chain)


class TestFetchRoundWeights:

    def test_round_in_mc_order(self):
        chain = init_chain(np.zeros(2), difficulty=0)
        rng = np.random.default_rng(0)
        uploads = {2: np.array([2., 2.]), 0: np.array([0., 0.5]), 1: np.array([1., 1.5])}
        for mc_id in [2, 0, 1]:
            chain.mine_block(1, 0, mc_id, uploads[mc_id], rng)

        fetched = chain.fetch_round_weights(1, 3)

        assert [mc_id for mc_id, _ in fetched] == [0, 1, 2]
        for mc_id, weights in fetched:
            assert weights.tobytes() == uploads[mc_id].tobytes()

    def test_incomplete_round(self):
        chain = mined_chain(3)

        with pytest.raises(IncompleteRound):
            chain.fetch_round_weights(2, 3)
        with pytest.raises(IncompleteRound):
            chain.fetch_round_weights(1, 4)


class TestExportImport:

    def test_round_trip(self, tmp_path):
        chain = mined_chain(9)
        path = str(tmp_path / 'chain.jsonl')

        export_chain(chain, path)
        imported = import_chain(path)

        assert verify_chain(imported)
        assert len(imported) == len(chain)
        assert imported.reward_ledger == chain.reward_ledger
        assert imported.broadcast_log == chain.broadcast_log
        assert [b.hash for b in imported.blocks] == [b.hash for b in chain.blocks]
        assert np.array_equal(imported.blocks[5].payload, chain.blocks[5].payload)

    def test_digest_only_round_trip(self, tmp_path):
        chain = mined_chain(6, embed_payload=False)
        path = str(tmp_path / 'chain.jsonl')

        assert chain.blocks[1].payload is None
        assert verify_chain(chain)
        export_chain(chain, path)
        imported = import_chain(path)

        assert verify_chain(imported)
        assert [w.tobytes() for _, w in imported.fetch_round_weights(1, 3)] == \
            [w.tobytes() for _, w in chain.fetch_round_weights(1, 3)]

    def test_tampered_file(self, tmp_path):
        chain = mined_chain(6)
        path = tmp_path / 'chain.jsonl'
        export_chain(chain, str(path))

        lines = path.read_text().splitlines()
        lines[3] = lines[3].replace('"mc_id": 1', '"mc_id": 2')
        path.write_text('\n'.join(lines) + '\n')

        assert not verify_chain(import_chain(str(path)))

    def test_invalid_file(self, tmp_path):
        path = tmp_path / 'chain.jsonl'
        path.write_text('not json\n')

        with pytest.raises(ChainFormatError):
            import_chain(str(path))
