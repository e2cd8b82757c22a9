#
# Launch the federated learning simulator, development use
#
# Replaced by a generated entry point when run in installed package mode

from fedledger.main import main

if __name__ == '__main__':
    main()
