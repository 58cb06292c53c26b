# coding: utf-8
# Standard Python libraries
import copy
from pathlib import Path
from typing import Any, Optional, Union

# https://github.com/usnistgov/DataModelDict
from DataModelDict import DataModelDict as DM

# Local imports
from ..errors import ValidationError
from ..tools import aslist, parse_quantity
from ..circuit import PhaseGridConfig
from ..field import (FieldModel, FieldSweep, GapModel, JunctionFieldParams,
                     JunctionGeometry)
from ..coherence import EnvelopeModel, NoiseSpec, calibrate_coil_constant
from ..optim import OptimizerConfig
from ..tracesim import SequenceTruth, TraceConfig

__all__ = ['RunConfig']

# Document layout: section -> key -> canonical unit (str), a python type, or
# a nested section.  Keys use the hyphenated form of the document.
_SCHEMA = {
    'circuit-model': {
        'e-c': 'GHz',
        'method': str,
        'regime-threshold': '',
        'grid-points': int,
        'grid-max-points': int,
        'grid-rel-tol': '',
        'max-levels': int,
    },
    'field-model': {
        'model': str,
        'gap-junction': int,
        'jj1': {'ej0': 'GHz', 'b-delta': 'mT', 'b-phi0': 'mT'},
        'jj2': {'ej0': 'GHz', 'b-delta': 'mT', 'b-phi0': 'mT'},
        'barrier-thickness': 'nm',
        'london-depth': 'nm',
        'gap': {'b-c': 'mT', 'delta-ratio-mode': bool, 'delta0': 'ueV',
                'temperature': 'mK'},
    },
    'coherence-model': {
        'envelope': {'gamma-const': 'kHz', 'c': 'kHz/mT^2', 'b-offs': 'mT'},
        'coil-constant': 'mT/A',
        's-i': 'A^2/Hz',
        'calibration-field': 'mT',
        'target-slope': 'MHz/A',
        'operating-field': 'mT',
    },
    'optim': {
        'max-iterations': int,
        'param-tol': '',
        'objective-tol': '',
        'seed': int,
        'n-starts': int,
        'frozen': list,
    },
    'trace-sim': {
        'seed': int,
        'noise-sigma': '',
        'n-points': int,
        'gamma-phi': 'per_us',
        'resonator-frequency': 'GHz',
        'resonator-q': '',
        'resonator-depth': '',
        'qubit-linewidth': 'MHz',
        'rabi-t-pi': 'us',
        'rabi-decay': 'us',
    },
    'cli-io': {
        'input': Path,
        'output-directory': Path,
        'b-start': 'mT',
        'b-stop': 'mT',
        'b-step': 'mT',
        'direction': str,
    },
}

# Junction values from the measured two-junction device
_DEFAULTS = {
    'circuit-model': {
        'e-c': 0.19,
        'method': 'approx',
        'regime-threshold': None,
        'grid-points': 512,
        'grid-max-points': 8192,
        'grid-rel-tol': 1e-9,
        'max-levels': 6,
    },
    'field-model': {
        'model': 'interference',
        'gap-junction': 1,
        'jj1': {'ej0': 16.15, 'b-delta': 1.8, 'b-phi0': 300.0},
        'jj2': {'ej0': 300.0, 'b-delta': -0.2, 'b-phi0': 25.5},
        'barrier-thickness': 1.0,
        'london-depth': 16.0,
        'gap': {'b-c': 168.0, 'delta-ratio-mode': True, 'delta0': 180.0,
                'temperature': 30.0},
    },
    'coherence-model': {
        'envelope': {'gamma-const': 53.4, 'c': 0.785, 'b-offs': 2.25},
        'coil-constant': None,
        's-i': 1e-15,
        'calibration-field': 21.0,
        'target-slope': 652.0,
        'operating-field': 21.0,
    },
    'optim': {
        'max-iterations': 2000,
        'param-tol': 1e-9,
        'objective-tol': 1e-12,
        'seed': None,
        'n-starts': 8,
        'frozen': ['e_c'],
    },
    'trace-sim': {
        'seed': None,
        'noise-sigma': 0.0,
        'n-points': 101,
        'gamma-phi': 0.0939,
        'resonator-frequency': 7.0,
        'resonator-q': 5100.0,
        'resonator-depth': 0.5,
        'qubit-linewidth': 2.0,
        'rabi-t-pi': 0.1,
        'rabi-decay': 1.0,
    },
    'cli-io': {
        'input': None,
        'output-directory': None,
        'b-start': -30.0,
        'b-stop': 30.0,
        'b-step': 0.1,
        'direction': 'up',
    },
}

def _parse_bool(value: Any, name: str) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ('true', '1', 'yes'):
        return True
    if text in ('false', '0', 'no'):
        return False
    raise ValidationError(f'{name}: {value!r} is not a boolean')

def _parse_entry(kind: Any,
                 value: Any,
                 name: str,
                 base_dir: Path) -> Any:
    if isinstance(kind, dict):
        if not hasattr(value, 'keys'):
            raise ValidationError(f'{name}: expected a section')
        return _parse_section(kind, value, name, base_dir)
    if isinstance(kind, str):
        return parse_quantity(value, kind, name)
    if kind is bool:
        return _parse_bool(value, name)
    if kind is int:
        try:
            number = float(value)
        except (TypeError, ValueError) as err:
            raise ValidationError(f'{name}: {value!r} is not an integer') from err
        if not number.is_integer():
            raise ValidationError(f'{name}: {value!r} is not an integer')
        return int(number)
    if kind is list:
        if isinstance(value, str):
            return [v for v in value.replace(',', ' ').split()]
        return [str(v) for v in aslist(value)]
    if kind is Path:
        path = Path(str(value))
        if not path.is_absolute():
            path = base_dir / path
        return path
    return str(value)

def _parse_section(schema: dict,
                   content: Any,
                   prefix: str,
                   base_dir: Path) -> dict:
    unknown = [key for key in content.keys() if key not in schema]
    if len(unknown) > 0:
        raise ValidationError(f'{prefix}: unknown keys {unknown}; '
                              f'allowed keys are {list(schema)}')
    values = {}
    for key, value in content.items():
        values[key] = _parse_entry(schema[key], value, f'{prefix}.{key}', base_dir)
    return values

def _merge(base: dict, update: dict):
    for key, value in update.items():
        if isinstance(value, dict):
            _merge(base[key], value)
        else:
            base[key] = value

def _kwargs(section: dict) -> dict:
    return {key.replace('-', '_'): value for key, value in section.items()}

class RunConfig():
    """
    Run configuration holding the parameters of every module plus input
    and output paths.  Documents are JSON or XML with root element
    'run-config' and one section per module.  Numeric entries are either
    bare numbers in the canonical unit or {"value": x, "unit": u} pairs.
    """
    def __init__(self,
                 model: Union[str, Path, DM, None] = None,
                 base_dir: Union[str, Path, None] = None):
        """
        Class initializer.

        Parameters
        ----------
        model : str, Path or DataModelDict, optional
            Path to a JSON/XML run-config file, its content, or a loaded
            DataModelDict.  If not given, default values are used.
        base_dir : str or Path, optional
            Directory relative file paths are resolved against.  Defaults
            to the directory of the file if model is a path, otherwise the
            working directory.

        Raises
        ------
        ValidationError
            For unknown sections, keys or units, for invalid values, or if
            a referenced input file does not exist.
        """
        self.__values = copy.deepcopy(_DEFAULTS)
        self.__source = None
        if base_dir is None:
            base_dir = Path.cwd()
        base_dir = Path(base_dir)

        if model is not None:
            if isinstance(model, str) and not model.lstrip().startswith(('{', '<')):
                model = Path(model)
            if isinstance(model, Path):
                path = Path(model)
                if not path.is_file():
                    raise ValidationError(f'run-config file {path} does not exist')
                self.__source = path
                base_dir = path.parent
                model = path.read_text(encoding='utf-8')
            try:
                model = DM(model)
            except Exception as err:
                raise ValidationError(f'could not parse run-config: {err}') from err
            self.load_model(model, base_dir)

        self.__base_dir = base_dir
        self.__check()

    @classmethod
    def default(cls) -> 'RunConfig':
        """RunConfig with the values of the measured device"""
        return cls()

    def __repr__(self) -> str:
        source = self.__source if self.__source is not None else 'defaults'
        return f'RunConfig({source})'

    def load_model(self,
                   model: DM,
                   base_dir: Path):
        """
        Loads a run-config DataModelDict, overriding the current values.
        """
        if 'run-config' not in model:
            raise ValidationError('run-config document needs a "run-config" root')
        content = model['run-config']
        if content is None:
            return
        if not hasattr(content, 'keys'):
            raise ValidationError('run-config root must hold sections')
        values = _parse_section(_SCHEMA, content, 'run-config', Path(base_dir))
        _merge(self.__values, values)

    def __check(self):
        """Builds every component once so invalid values fail at load"""
        self.field_model()
        self.envelope()
        self.optimizer()
        self.trace_config()
        self.sweep()
        if self.input is not None and not self.input.is_file():
            raise ValidationError(f'input file {self.input} does not exist')
        direction = self.__values['cli-io']['direction']
        if direction not in ('up', 'down'):
            raise ValidationError(f'direction must be "up" or "down", got {direction!r}')

    def __getitem__(self, section: str) -> dict:
        return copy.deepcopy(self.__values[section])

    @property
    def source(self) -> Optional[Path]:
        """Path or None: the file the configuration was loaded from"""
        return self.__source

    @property
    def input(self) -> Optional[Path]:
        """Path or None: the input data file"""
        return self.__values['cli-io']['input']

    @property
    def output_directory(self) -> Optional[Path]:
        """Path or None: the directory results are written to"""
        return self.__values['cli-io']['output-directory']

    @property
    def frozen(self) -> list:
        """list: names of spectrum-fit parameters held fixed"""
        return list(self.__values['optim']['frozen'])

    def junction(self, index: int) -> JunctionFieldParams:
        """JunctionFieldParams for junction 1 or 2"""
        if index not in (1, 2):
            raise ValidationError(f'junction index must be 1 or 2, got {index}')
        return JunctionFieldParams(**_kwargs(self.__values['field-model'][f'jj{index}']))

    def geometry(self, length: Optional[float] = None) -> JunctionGeometry:
        """JunctionGeometry from the barrier thickness and London depth"""
        field = self.__values['field-model']
        return JunctionGeometry(barrier_thickness=field['barrier-thickness'],
                                london_depth=field['london-depth'],
                                length=length)

    def gap(self) -> GapModel:
        """GapModel of the field-model section"""
        gap = self.__values['field-model']['gap']
        return GapModel(b_c=gap['b-c'], delta_ratio_mode=gap['delta-ratio-mode'],
                        delta0_ueV=gap['delta0'], temperature_mK=gap['temperature'])

    def grid(self) -> PhaseGridConfig:
        """PhaseGridConfig of the circuit-model section"""
        circuit = self.__values['circuit-model']
        return PhaseGridConfig(points=circuit['grid-points'],
                               max_levels=circuit['max-levels'],
                               rel_tol=circuit['grid-rel-tol'],
                               max_points=circuit['grid-max-points'])

    def field_model(self) -> FieldModel:
        """FieldModel combining the circuit-model and field-model sections"""
        circuit = self.__values['circuit-model']
        field = self.__values['field-model']
        return FieldModel(self.junction(1), self.junction(2), circuit['e-c'],
                          model=field['model'], gap=self.gap(),
                          gap_junction=field['gap-junction'],
                          method=circuit['method'], grid=self.grid(),
                          regime_threshold=circuit['regime-threshold'])

    def sweep(self) -> FieldSweep:
        """FieldSweep from the b-start, b-stop and b-step entries"""
        io = self.__values['cli-io']
        return FieldSweep.from_range(io['b-start'], io['b-stop'], io['b-step'],
                                     direction=io['direction'])

    def envelope(self) -> EnvelopeModel:
        """EnvelopeModel of the coherence-model section"""
        return EnvelopeModel(**_kwargs(self.__values['coherence-model']['envelope']))

    @property
    def operating_field(self) -> float:
        """float: the field in mT the dephasing estimate is evaluated at"""
        return self.__values['coherence-model']['operating-field']

    def noise(self, field_model: Optional[FieldModel] = None) -> NoiseSpec:
        """
        NoiseSpec of the coherence-model section.  Without an explicit
        coil-constant, the constant is calibrated so that the model slope
        matches target-slope at calibration-field.
        """
        coherence = self.__values['coherence-model']
        coil_constant = coherence['coil-constant']
        if coil_constant is None:
            if field_model is None:
                field_model = self.field_model()
            coil_constant = calibrate_coil_constant(field_model,
                                                    b=coherence['calibration-field'],
                                                    target_mhz_per_a=coherence['target-slope'])
        return NoiseSpec(coil_constant, s_i=coherence['s-i'])

    def optimizer(self) -> OptimizerConfig:
        """OptimizerConfig of the optim section"""
        optim = dict(self.__values['optim'])
        del optim['frozen']
        return OptimizerConfig(**_kwargs(optim))

    def trace_config(self) -> TraceConfig:
        """TraceConfig of the trace-sim section"""
        trace = self.__values['trace-sim']
        return TraceConfig(seed=trace['seed'], noise_sigma=trace['noise-sigma'],
                           n_points=trace['n-points'])

    def sequence_truth(self, field_model: Optional[FieldModel] = None) -> SequenceTruth:
        """SequenceTruth of the trace-sim section"""
        if field_model is None:
            field_model = self.field_model()
        trace = dict(self.__values['trace-sim'])
        for key in ('seed', 'noise-sigma', 'n-points'):
            del trace[key]
        return SequenceTruth(field_model, envelope=self.envelope(), **_kwargs(trace))

    def build_model(self) -> DM:
        """
        Returns the resolved configuration as a DataModelDict in canonical
        units.  Loading it back gives the same configuration.
        """
        def convert(values: dict) -> DM:
            section = DM()
            for key, value in values.items():
                if value is None:
                    continue
                if isinstance(value, dict):
                    section[key] = convert(value)
                elif isinstance(value, Path):
                    section[key] = value.as_posix()
                elif isinstance(value, list):
                    section[key] = ','.join(value)
                else:
                    section[key] = value
            return section

        model = DM()
        model['run-config'] = convert(self.__values)
        return model
