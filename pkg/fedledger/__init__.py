#
# Medical-center federated learning over a proof-of-work ledger, desk-scale simulator
#

__version__ = '0.1.0'
