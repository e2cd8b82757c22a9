#
# Command line entry point: run, sweep, audit-chain and stability-check
#

from .Progress import Progress
from .harness import ConfigError
from .harness.ExperimentConfig import load_config
from .harness.experiment import run_experiment, run_sweep, summarize, association_gap, stability_check
from .harness.metrics import export_metrics
from .harness.plots import write_figures
from .ledger import LedgerError
from .ledger.Chain import import_chain, export_chain
from .matching import NoFeasiblePairs

import argparse
import logging
import asyncio
import os
import sys

# Exit statuses
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_CONFIG = 2
EXIT_INFEASIBLE = 3

_logger = logging.getLogger('fedledger')


def parse_arguments(argv=None):
    """ Parse command line arguments """

    parser = argparse.ArgumentParser(prog='fedledger',
                                     description='Blockchain-based private federated learning simulator')
    parser.add_argument("--log-level", default="WARNING", help="Log level in (DEBUG, INFO, WARNING, ERROR)")
    commands = parser.add_subparsers(dest='command', required=True)

    run = commands.add_parser('run', help='Run one experiment')
    run.add_argument("--config", "-c", required=True, help="YAML experiment configuration")
    run.add_argument("--seed", type=int, help="Override the configured seed")
    run.add_argument("--out", "-o", default="metrics.csv", help="Metrics file")
    run.add_argument("--format", choices=['csv', 'jsonl'], help="Metrics format, overrides the configuration")
    run.add_argument("--chain", help="Export the resulting chain to this file")

    sweep = commands.add_parser('sweep', help='Run every point of the configured sweep')
    sweep.add_argument("--config", "-c", required=True, help="YAML experiment configuration with a sweep section")
    sweep.add_argument("--seed", type=int, help="Override the configured seed")
    sweep.add_argument("--out", "-o", default="sweep.csv", help="Metrics file")
    sweep.add_argument("--format", choices=['csv', 'jsonl'], help="Metrics format, overrides the configuration")
    sweep.add_argument("--workers", "-w", type=int, help="Parallel experiment processes")

    audit = commands.add_parser('audit-chain', help='Verify an exported chain')
    audit.add_argument("--chain", required=True, help="Exported chain file")

    stability = commands.add_parser('stability-check', help='Cross-check MMA stability on random small instances')
    stability.add_argument("--instances", type=int, default=500, help="Number of random instances")
    stability.add_argument("--seed", type=int, default=0, help="Seed of the instances")

    return parser.parse_args(argv)


def setup_logging(log_level):
    """ Console handler on the package logger """
    logger = logging.getLogger('fedledger')

    # create console handler
    console_handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    numeric_level = getattr(logging, log_level.upper(), None)
    if isinstance(numeric_level, int):
        logger.setLevel(numeric_level)
        console_handler.setLevel(numeric_level)


def _load(args):
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg = cfg.with_value('seed', args.seed)
    if args.format is not None:
        cfg = cfg.with_value('output.format', args.format)
    return cfg


def _figures_prefix(out):
    directory = os.path.dirname(out) or '.'
    return directory, os.path.splitext(os.path.basename(out))[0]


async def command_run(args):
    cfg = _load(args)
    result = run_experiment(cfg)
    export_metrics(result.rows, cfg.output_format, args.out, cfg.include_timing)
    if args.chain:
        export_chain(result.chain, args.chain)
    if cfg.plots:
        write_figures([result], *_figures_prefix(args.out))

    final = result.final
    print('%s: %d participants, final J = %.6g, F = %.6g, test accuracy = %.4f'
          % (result.label, final.participants, final.global_loss, final.objective, final.test_accuracy))
    return EXIT_OK


async def command_sweep(args):
    cfg = _load(args)
    if cfg.sweep is None:
        _logger.error('Configuration %s has no sweep section', args.config)
        return EXIT_INVALID_CONFIG

    progress = Progress()
    results = await run_sweep(cfg, args.workers or cfg.workers, progress)
    rows = [row for result in results for row in result.rows]
    export_metrics(rows, cfg.output_format, args.out, cfg.include_timing)

    summaries = summarize(results)
    if cfg.plots:
        write_figures(results, *_figures_prefix(args.out), summaries=summaries, sweep_parameter=cfg.sweep.parameter)

    for summary in summaries:
        print('%s = %s: %d seeds, F = %.6g, J = %.6g, test accuracy = %.4f, wall time = %.3gs'
              % (cfg.sweep.parameter, summary.value, summary.seeds, summary.objective, summary.global_loss,
                 summary.test_accuracy, summary.wall_time))
    gap = association_gap(summaries)
    if gap is not None:
        print('Relative objective gap of mma over random: %.2f%%' % (100. * gap))

    failed = progress.count(Progress.ERROR)
    if progress.count(Progress.WARN):
        _logger.warning('%d sweep points ended with a non-finite loss', progress.count(Progress.WARN))
    if progress.worst_status() >= Progress.ERROR:
        _logger.error('%d of %d sweep points had no feasible pair', failed, progress.num_steps)
        return EXIT_INFEASIBLE
    return EXIT_OK


async def command_audit_chain(args):
    chain = import_chain(args.chain)
    valid = chain.verify()
    print('Chain %s: %d blocks, difficulty %d, %s' % (args.chain, len(chain), chain.difficulty,
                                                      'valid' if valid else 'INVALID'))
    for miner, reward in sorted(chain.reward_ledger.items()):
        print('  miner %d: %d blocks, reward %g' % (miner, chain.blocks_mined_by(miner), reward))
    print('  broadcasts: %d' % chain.broadcast_log)
    return EXIT_OK if valid else EXIT_CHECK_FAILED


async def command_stability_check(args):
    failures = stability_check(args.instances, args.seed)
    print('%d instances, %d unstable' % (args.instances, len(failures)))
    return EXIT_OK if not failures else EXIT_CHECK_FAILED


commands = {
    'run': command_run,
    'sweep': command_sweep,
    'audit-chain': command_audit_chain,
    'stability-check': command_stability_check,
}


async def run_app(args):
    """ Run the selected command, @return the exit status """

    setup_logging(args.log_level)

    try:
        return await commands[args.command](args)
    except ConfigError as e:
        _logger.error('Invalid configuration: %s', e.message)
        return EXIT_INVALID_CONFIG
    except NoFeasiblePairs as e:
        _logger.warning('Infeasible instance: %s', e.message)
        return EXIT_INFEASIBLE
    except LedgerError as e:
        _logger.error('Chain error: %s', e.message)
        return EXIT_CHECK_FAILED


def main(argv=None):
    """ Application main entry point """
    args = parse_arguments(argv)
    sys.exit(asyncio.run(run_app(args)))
