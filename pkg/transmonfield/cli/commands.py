# coding: utf-8
# Standard Python libraries
import logging
from pathlib import Path
from typing import Optional, Sequence

# https://click.palletsprojects.com/
import click

# https://numpy.org/
import numpy as np

# https://pandas.pydata.org/
import pandas as pd

# https://github.com/usnistgov/DataModelDict
from DataModelDict import DataModelDict as DM

# Local imports
from ..errors import FitError, ValidationError
from ..Settings import settings
from ..field import FieldSweep
from ..coherence import (flux_noise_dephasing, frequency_slope_vs_current,
                         loss_budget_table)
from ..optim import (fit_dephasing_line, fit_envelope, fit_spectrum,
                     spectrum_field_model)
from ..tracesim import run_sweep
from .RunConfig import RunConfig
from .SweepTable import SweepTable
from .load_sweep_csv import load_sweep_csv
from .plotdata import emit_plot_data
from .checkpaper import check_paper

__all__ = ['cli', 'main', 'parse_b_range']

logger = logging.getLogger(__name__)

def parse_b_range(text: str,
                  direction: str = 'up') -> FieldSweep:
    """
    Parses a 'start:stop:step' field range in mT into a FieldSweep.
    """
    parts = text.split(':')
    if len(parts) != 3:
        raise click.BadParameter(f'expected start:stop:step, got {text!r}')
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as err:
        raise click.BadParameter(f'non-numeric field range {text!r}') from err
    try:
        return FieldSweep.from_range(start, stop, step, direction=direction)
    except ValidationError as err:
        raise click.BadParameter(str(err)) from err

def _config(path: Optional[str]) -> RunConfig:
    if path is None:
        return RunConfig.default()
    return RunConfig(Path(path))

def _output_directory(out: Optional[str], config: RunConfig) -> Path:
    if out is not None:
        directory = Path(out)
    elif config.output_directory is not None:
        directory = config.output_directory
    else:
        directory = settings.output_directory
    directory.mkdir(parents=True, exist_ok=True)
    return directory

def _input_table(infile: Optional[str], config: RunConfig) -> SweepTable:
    if infile is not None:
        return load_sweep_csv(infile)
    if config.input is not None:
        return load_sweep_csv(config.input)
    raise click.UsageError('no input file: pass --in or set cli-io input in the config')

def _write_csv(table: pd.DataFrame, path: Path):
    table.to_csv(path, index=False, float_format='%.17g')
    logger.info('wrote %s', path)

def _write_json(model: DM, path: Path):
    path.write_text(model.json(indent=4), encoding='utf-8')
    logger.info('wrote %s', path)

config_option = click.option('-c', '--config', type=click.Path(exists=True, dir_okay=False),
                             default=None, help='Run-config JSON or XML file.')
out_option = click.option('-o', '--out', type=click.Path(file_okay=False), default=None,
                          help='Output directory.')
in_option = click.option('-i', '--in', 'infile', type=click.Path(exists=True, dir_okay=False),
                         default=None, help='Sweep CSV file.')

@click.group()
@click.option('-v', '--verbose', is_flag=True, help='Log progress messages.')
def cli(verbose):
    """Two-junction transmon in an in-plane magnetic field."""
    if verbose:
        logging.basicConfig(level=logging.INFO,
                            format='%(levelname)s %(name)s: %(message)s')

@cli.command()
@config_option
@out_option
@click.option('-b', '--b-range', default=None, help='Field range start:stop:step in mT.')
def spectrum(config, out, b_range):
    """Qubit transitions over a field sweep."""
    run = _config(config)
    sweep = run.sweep() if b_range is None else parse_b_range(b_range)
    table = run.field_model().frequencies(sweep)
    directory = _output_directory(out, run)
    _write_csv(table, directory / 'spectrum.csv')
    emit_plot_data(table[['b_mT', 'nu01_GHz', 'nu12_GHz']], directory / 'spectrum')
    click.echo(f'{len(table)} field points written to {directory}')

@cli.command('fit-spectrum')
@config_option
@in_option
@out_option
def fit_spectrum_command(config, infile, out):
    """Fit junction field parameters to a measured nu01(B)."""
    run = _config(config)
    table = _input_table(infile, run)
    table.require('nu01_GHz')
    data = table.data[['b_mT', 'nu01_GHz']]

    field_model = run.field_model()
    result = fit_spectrum(data, field_model.jj1, field_model.jj2, field_model.e_c,
                          frozen=run.frozen, config=run.optimizer(),
                          regime_threshold=field_model.regime_threshold)

    directory = _output_directory(out, run)
    _write_json(result.build_model(), directory / 'fit_spectrum.json')
    fitted = spectrum_field_model(result, regime_threshold=field_model.regime_threshold)
    plot_table = data.assign(model_nu01_GHz=fitted.nu01(data['b_mT'].to_numpy()))
    emit_plot_data(plot_table, directory / 'fit_spectrum', style='scatter-with-model',
                   model_columns=['model_nu01_GHz'])

    for name, value in result.as_dict().items():
        click.echo(f'{name} = {value:.6g}')
    if not result.converged:
        raise FitError(f'spectrum fit did not converge: {result.message}')

@cli.command('coherence-budget')
@config_option
@in_option
@out_option
def coherence_budget(config, infile, out):
    """Split measured decay rates into loss channels."""
    run = _config(config)
    table = _input_table(infile, run)
    table.require('gamma1_per_us')
    budget = loss_budget_table(table.samples(), run.envelope())

    directory = _output_directory(out, run)
    _write_csv(budget, directory / 'coherence_budget.csv')
    plot_table = budget[['b_mT', 'gamma1_kHz']].assign(
        envelope_kHz=run.envelope().rate(budget['b_mT'].to_numpy()))
    emit_plot_data(plot_table, directory / 'coherence_budget',
                   style='scatter-with-model', model_columns=['envelope_kHz'])
    click.echo(f'{len(budget)} samples written to {directory}')

@cli.command('fit-envelope')
@config_option
@in_option
@out_option
def fit_envelope_command(config, infile, out):
    """Fit the parabolic lower envelope of measured decay rates."""
    run = _config(config)
    table = _input_table(infile, run)
    table.require('gamma1_per_us')
    samples = table.samples()
    envelope = fit_envelope(samples)

    directory = _output_directory(out, run)
    _write_json(envelope.build_model(), directory / 'fit_envelope.json')
    data = table.data.dropna(subset=['gamma1_per_us'])
    plot_table = pd.DataFrame({'b_mT': data['b_mT'],
                               'gamma1_kHz': data['gamma1_per_us'] * 1e3,
                               'envelope_kHz': envelope.rate(data['b_mT'].to_numpy())})
    emit_plot_data(plot_table, directory / 'fit_envelope', style='scatter-with-model',
                   model_columns=['envelope_kHz'])
    for name, value in envelope.metadata().items():
        click.echo(f'{name} = {value:.6g}')

@cli.command()
@config_option
@out_option
@click.option('-b', '--field', type=float, default=None,
              help='Operating field in mT.  Defaults to the config value.')
def dephasing(config, out, field):
    """Flux-noise dephasing rate at an operating field."""
    run = _config(config)
    field_model = run.field_model()
    noise = run.noise(field_model)
    b = run.operating_field if field is None else field
    slope = frequency_slope_vs_current(field_model, b, noise)
    gamma_phi = flux_noise_dephasing(slope, noise.s_i)

    model = DM()
    model['dephasing-estimate'] = DM()
    estimate = model['dephasing-estimate']
    estimate['b_mT'] = b
    estimate['nu01_GHz'] = field_model.nu01(b)
    estimate['coil_constant_mT_per_A'] = noise.coil_constant
    estimate['s_i_A2_per_Hz'] = noise.s_i
    estimate['slope_MHz_per_A'] = slope / (2 * np.pi) * 1e-6
    estimate['gamma_phi_kHz'] = gamma_phi * 1e-3

    directory = _output_directory(out, run)
    _write_json(model, directory / 'dephasing.json')
    click.echo(f'slope/2pi = {slope / (2 * np.pi) * 1e-6:.6g} MHz/A')
    click.echo(f'gamma_phi = {gamma_phi * 1e-3:.6g} kHz')

@cli.command('fit-dephasing')
@config_option
@in_option
@out_option
def fit_dephasing(config, infile, out):
    """Fit the constant pure dephasing from (gamma1, gamma2) pairs."""
    run = _config(config)
    table = _input_table(infile, run)
    table.require('gamma1_per_us', 'gamma2_per_us')
    fit = fit_dephasing_line(table.samples())

    model = DM()
    model['dephasing-line'] = DM(fit.metadata())
    directory = _output_directory(out, run)
    _write_json(model, directory / 'fit_dephasing.json')

    data = table.data.dropna(subset=['gamma1_per_us', 'gamma2_per_us'])
    plot_table = pd.DataFrame({'gamma1_per_us': data['gamma1_per_us'],
                               'gamma2_per_us': data['gamma2_per_us'],
                               'model_gamma2_per_us': data['gamma1_per_us'] / 2
                                                      + fit.gamma_phi})
    emit_plot_data(plot_table, directory / 'fit_dephasing', style='scatter-with-model',
                   model_columns=['model_gamma2_per_us'])
    click.echo(f'gamma_phi = {fit.gamma_phi_khz:.6g} kHz from {fit.n_pairs} pairs')

@cli.command('simulate-sequence')
@config_option
@out_option
@click.option('-b', '--b-range', default=None, help='Field range start:stop:step in mT.')
@click.option('-d', '--direction', type=click.Choice(['up', 'down']), default=None,
              help='Sweep direction.  Defaults to the config value.')
def simulate_sequence(config, out, b_range, direction):
    """Synthetic measurement sequence over a field sweep."""
    run = _config(config)
    sweep = run.sweep()
    if direction is None:
        direction = sweep.direction
    if b_range is None:
        sweep = FieldSweep(sweep.values if direction == sweep.direction
                           else sweep.values[::-1], direction=direction)
    else:
        sweep = parse_b_range(b_range, direction=direction)

    table = run_sweep(sweep, run.sequence_truth(), run.trace_config(), run.optimizer())
    directory = _output_directory(out, run)
    SweepTable(table).save_csv(directory / 'sequence.csv')
    emit_plot_data(table[['b_mT', 'gamma1_per_us', 'gamma2_per_us']],
                   directory / 'sequence', style='xy')
    click.echo(f'{len(table)} field points written to {directory}')

@cli.command('check-paper')
def check_paper_command():
    """Run the built-in reproductions of the published device numbers."""
    table = check_paper()
    with pd.option_context('display.width', 120, 'display.max_colwidth', 60):
        click.echo(table.to_string(index=False))
    if table['passed'].all():
        click.echo('all checks passed')
        return 0
    click.echo(f'{int((~table["passed"]).sum())} checks failed')
    return 2

def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs a command and maps failures to exit codes: 1 for usage errors,
    2 for invalid input or configuration, 3 for failed fits.
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None,
                          prog_name='transmonfield', standalone_mode=False)
    except click.UsageError as err:
        err.show()
        return 1
    except click.Abort:
        return 1
    except FitError as err:
        click.echo(f'fit failed: {err}', err=True)
        return 3
    except (ValueError, OSError) as err:
        click.echo(f'invalid input: {err}', err=True)
        return 2
    if isinstance(result, int):
        return result
    return 0
