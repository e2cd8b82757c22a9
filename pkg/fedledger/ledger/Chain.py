from . import VerificationFailed, IncompleteRound, ChainFormatError, codec
from .Block import Block, NO_PARTY

from typing import List, Dict
import numpy as np
import json
import logging

_logger = logging.getLogger(__name__)

# Version of the exported chain file
CHAIN_FORMAT = 1

# Upper bound of the seeded nonce start
NONCE_START_RANGE = 2 ** 32


def verify_upload(weights, expected_len):
    """ Miner check of received weights: expected length and finite entries """
    weights = np.asarray(weights)
    return weights.ndim == 1 and len(weights) == expected_len and bool(np.all(np.isfinite(weights)))


class Chain:
    """ Append-only simulated blockchain, one block per uploaded local model """

    def __init__(self, difficulty=8, num_miners=1, mining_reward=10., embed_payload=True):
        if difficulty < 0 or difficulty > codec.DIGEST_BITS:
            raise ValueError('Difficulty must be in [0, %d], got %d' % (codec.DIGEST_BITS, difficulty))
        self.difficulty = difficulty
        self.num_miners = num_miners
        self.mining_reward = mining_reward
        self.embed_payload = embed_payload
        self.blocks: List[Block] = []
        self.reward_ledger: Dict[int, float] = {}
        self.broadcast_log = 0
        self.attempts_log: List[int] = []
        # Payloads of digest-only blocks, by block hash
        self.off_chain: Dict[str, np.ndarray] = {}
        # Heights of the blocks of each round
        self.round_index: Dict[int, List[int]] = {}

    @property
    def tip(self):
        return self.blocks[-1]

    @property
    def weights_len(self):
        """ Length of the weight vectors accepted on this chain, set by the genesis block """
        return len(self.payload(self.blocks[0]))

    def __len__(self):
        return len(self.blocks)

    def payload(self, block: Block):
        return block.payload if block.payload is not None else self.off_chain[block.hash]

    def _append(self, block: Block, weights):
        if block.payload is None:
            stored = np.array(weights, dtype=np.float64)
            stored.setflags(write=False)
            self.off_chain[block.hash] = stored
        if not block.is_genesis:
            self.round_index.setdefault(block.round, []).append(len(self.blocks))
        self.blocks.append(block)

    def mine_block(self, round_, miner_id, mc_id, weights, rng: np.random.Generator) -> Block:
        """ Search a nonce satisfying the difficulty from a seeded start, append the block,
            credit the mining reward to the miner and account its broadcast to the other miners
        """
        if not verify_upload(weights, self.weights_len):
            raise VerificationFailed('Upload of MC %d rejected by miner %d at round %d' % (mc_id, miner_id, round_))

        height = len(self.blocks)
        prev_hash = self.tip.hash
        digest = codec.payload_digest(weights)
        hasher = codec.header_hasher(codec.header_text(height, prev_hash, round_, miner_id, mc_id, height, digest))

        nonce = int(rng.integers(0, NONCE_START_RANGE))
        attempts = 1
        while not codec.meets_difficulty(codec.finish_hash(hasher, nonce), self.difficulty):
            nonce += 1
            attempts += 1

        block = Block.create(height, prev_hash, round_, miner_id, mc_id, weights, timestamp=height,
                             nonce=nonce, embed_payload=self.embed_payload)
        self._append(block, weights)

        self.reward_ledger[miner_id] = self.reward_ledger.get(miner_id, 0.) + self.mining_reward
        self.broadcast_log += self.num_miners - 1
        self.attempts_log.append(attempts)

        _logger.debug('Block %d mined by miner %d for MC %d in %d attempts', height, miner_id, mc_id, attempts)
        return block

    def verify(self):
        """ True when heights, hash linkage, proof of work and payload digests all hold """
        try:
            return self._verify()
        except Exception as e:
            _logger.warning('Chain verification error: %s', e)
            return False

    def _verify(self):
        if not self.blocks:
            return False

        prev_hash = codec.ZERO_HASH
        for height, block in enumerate(self.blocks):
            if block.height != height or block.prev_hash != prev_hash or block.timestamp != height:
                return False
            if block.compute_hash() != block.hash:
                return False
            if not block.is_genesis and not block.meets_difficulty(self.difficulty):
                return False
            if codec.payload_digest(self.payload(block)) != block.payload_digest:
                return False
            prev_hash = block.hash

        genesis = self.blocks[0]
        return genesis.miner_id == NO_PARTY and genesis.mc_id == NO_PARTY and genesis.round == 0

    def fetch_round_weights(self, round_, expected_count):
        """ All weight vectors uploaded at a global iteration, in MC id order """
        blocks = [self.blocks[h] for h in self.round_index.get(round_, [])]
        found = sorted(((b.mc_id, self.payload(b)) for b in blocks), key=lambda entry: entry[0])
        if len(found) < expected_count:
            raise IncompleteRound('Round %d has %d blocks, %d expected' % (round_, len(found), expected_count))
        return found

    def blocks_mined_by(self, miner_id):
        return sum(1 for b in self.blocks if not b.is_genesis and b.miner_id == miner_id)

    @staticmethod
    def from_blocks(blocks, difficulty, num_miners=1, mining_reward=10., off_chain=None):
        """ Chain over existing blocks, the reward and broadcast ledgers rebuilt from them """
        chain = Chain(difficulty, num_miners, mining_reward)
        chain.blocks = list(blocks)
        chain.off_chain = dict(off_chain or {})
        chain.embed_payload = all(b.payload is not None for b in chain.blocks)
        for height, block in enumerate(chain.blocks):
            if not block.is_genesis:
                chain.round_index.setdefault(block.round, []).append(height)
        for block in chain.blocks[1:]:
            chain.reward_ledger[block.miner_id] = chain.reward_ledger.get(block.miner_id, 0.) + mining_reward
            chain.broadcast_log += num_miners - 1
        return chain


def init_chain(genesis_weights, difficulty=8, num_miners=1, mining_reward=10., embed_payload=True) -> Chain:
    """ New chain anchored on the initial global model, the genesis block is exempt from proof of work """
    chain = Chain(difficulty, num_miners, mining_reward, embed_payload)
    genesis = Block.create(0, codec.ZERO_HASH, 0, NO_PARTY, NO_PARTY, genesis_weights, timestamp=0,
                           embed_payload=embed_payload)
    chain._append(genesis, genesis_weights)
    _logger.info('Chain initialized, difficulty %d, %d weights', difficulty, len(genesis_weights))
    return chain


def verify_chain(chain: Chain):
    return chain.verify()


def export_chain(chain: Chain, path):
    """ JSON lines: chain metadata, then one record per block """
    with open(path, 'w') as f:
        f.write(json.dumps(dict(format=CHAIN_FORMAT, difficulty=chain.difficulty, num_miners=chain.num_miners,
                                mining_reward=chain.mining_reward, length=len(chain))) + '\n')
        for block in chain.blocks:
            record = block.as_record()
            if block.payload is None:
                record['off_chain_payload'] = codec.encode_payload(chain.payload(block)).hex()
            f.write(json.dumps(record) + '\n')
    _logger.info('Chain of %d blocks exported to %s', len(chain), path)


def import_chain(path) -> Chain:
    """ Chain read back from export_chain output, not verified """
    try:
        with open(path) as f:
            records = [json.loads(line) for line in f if line.strip()]
        if not records:
            raise ChainFormatError('Empty chain file %s' % path)
        meta = records[0]
        if meta.get('format') != CHAIN_FORMAT:
            raise ChainFormatError('Unsupported chain format %s' % meta.get('format'))

        blocks, off_chain = [], {}
        for record in records[1:]:
            block = Block.from_record(record)
            if block.payload is None:
                stored = codec.decode_payload(bytes.fromhex(record['off_chain_payload']))
                stored.setflags(write=False)
                off_chain[block.hash] = stored
            blocks.append(block)
    except (ValueError, KeyError, TypeError) as e:
        raise ChainFormatError('Invalid chain file %s: %s' % (path, e))

    return Chain.from_blocks(blocks, int(meta['difficulty']), int(meta['num_miners']),
                             float(meta['mining_reward']), off_chain)
