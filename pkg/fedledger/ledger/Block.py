from . import codec

from dataclasses import dataclass
from typing import Optional
import numpy as np

# Miner and MC ids of the genesis block
NO_PARTY = -1


@dataclass(frozen=True)
class Block:
    """ Ledger entry carrying the weights uploaded by one MC for one global iteration """

    height: int
    prev_hash: str
    nonce: int
    round: int
    miner_id: int
    mc_id: int
    payload: Optional[np.ndarray]  # None when only the digest is kept on chain
    payload_digest: str
    timestamp: int  # logical clock
    hash: str

    def header(self):
        return codec.header_text(self.height, self.prev_hash, self.round, self.miner_id, self.mc_id,
                                 self.timestamp, self.payload_digest)

    def compute_hash(self):
        return codec.finish_hash(codec.header_hasher(self.header()), self.nonce).hex()

    def meets_difficulty(self, difficulty):
        return codec.meets_difficulty(bytes.fromhex(self.hash), difficulty)

    @property
    def is_genesis(self):
        return self.height == 0

    @staticmethod
    def create(height, prev_hash, round_, miner_id, mc_id, weights, timestamp, nonce=0, embed_payload=True):
        """ Block with its payload digest and hash computed for the given nonce """
        payload = np.array(weights, dtype=np.float64)
        payload.setflags(write=False)
        digest = codec.payload_digest(payload)
        header = codec.header_text(height, prev_hash, round_, miner_id, mc_id, timestamp, digest)
        return Block(height=height, prev_hash=prev_hash, nonce=nonce, round=round_,
                     miner_id=miner_id, mc_id=mc_id,
                     payload=payload if embed_payload else None, payload_digest=digest,
                     timestamp=timestamp, hash=codec.finish_hash(codec.header_hasher(header), nonce).hex())

    def as_record(self):
        """ Structured record with hex-encoded digests and payload """
        return dict(height=self.height, prev_hash=self.prev_hash, nonce=self.nonce, round=self.round,
                    miner_id=self.miner_id, mc_id=self.mc_id,
                    payload=None if self.payload is None else codec.encode_payload(self.payload).hex(),
                    payload_digest=self.payload_digest, timestamp=self.timestamp, hash=self.hash)

    @staticmethod
    def from_record(record):
        payload = record['payload']
        if payload is not None:
            payload = codec.decode_payload(bytes.fromhex(payload))
            payload.setflags(write=False)
        return Block(height=int(record['height']), prev_hash=record['prev_hash'], nonce=int(record['nonce']),
                     round=int(record['round']), miner_id=int(record['miner_id']), mc_id=int(record['mc_id']),
                     payload=payload, payload_digest=record['payload_digest'],
                     timestamp=int(record['timestamp']), hash=record['hash'])
