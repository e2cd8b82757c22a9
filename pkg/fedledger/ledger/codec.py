#
# Canonical encodings and digests of the ledger
#

import numpy as np
import hashlib

ZERO_HASH = '0' * 64
DIGEST_BITS = 256


def encode_payload(weights):
    """ Fixed-width little-endian float64 entries in index order """
    return np.asarray(weights, dtype='<f8').tobytes()


def decode_payload(data):
    return np.frombuffer(data, dtype='<f8').astype(np.float64)


def payload_digest(weights):
    return hashlib.sha256(encode_payload(weights)).hexdigest()


def header_text(height, prev_hash, round_, miner_id, mc_id, timestamp, digest):
    """ Canonical block header, the nonce is appended when hashing """
    return '%d:%s:%d:%d:%d:%d:%s:' % (height, prev_hash, round_, miner_id, mc_id, timestamp, digest)


def header_hasher(header):
    """ Hash state over the header, to be copied for each nonce attempt """
    return hashlib.sha256(header.encode('utf-8', 'surrogatepass'))


def finish_hash(hasher, nonce):
    hasher = hasher.copy()
    hasher.update(b'%d' % nonce)
    return hasher.digest()


def meets_difficulty(digest: bytes, difficulty):
    """ True when the digest starts with difficulty zero bits """
    return int.from_bytes(digest, 'big') >> (DIGEST_BITS - difficulty) == 0
