# coding: utf-8
# Standard Python libraries
from pathlib import Path
from typing import Optional, Union

# transmonfield imports
from .tools import screen_input

import yabadaba.Settings

__all__ = ['settings']

class Settings(yabadaba.Settings.Settings):
    """
    Class for handling saved settings.
    """
    def __init__(self):
        """
        Class initializer. Calls load.
        """
        super().__init__('.transmonfield', 'settings.json')

    @property
    def regime_threshold(self) -> float:
        """float: The default minimum E_J,eff/E_C for the transmon regime"""
        return float(self.__content.get('regime_threshold', 20.0))

    def set_regime_threshold(self,
                             value: Union[float, str, None] = None):
        """
        Sets the default transmon-regime threshold used when flagging
        spectra as valid.

        Parameters
        ----------
        value : float, optional
            The minimum effective E_J/E_C ratio.  If None (default), then a
            prompt will ask for a value.
        """
        # Ask for value if not given
        if value is None:
            value = screen_input("Enter the transmon regime threshold E_J/E_C:")

        try:
            value = float(value)
        except (TypeError, ValueError) as err:
            raise ValueError(f'Invalid regime threshold {value!r}: must be a number') from err
        if not value > 0:
            raise ValueError('regime threshold must be positive')

        if value == 20.0 and 'regime_threshold' in self.__content:
            del self.__content['regime_threshold']
        elif value != 20.0:
            self.__content['regime_threshold'] = value

        # Save changes
        self.save()

    @property
    def output_directory(self) -> Path:
        """pathlib.Path: The default directory where command results are written"""
        return Path(self.__content.get('output_directory', 'transmonfield_output'))

    def set_output_directory(self,
                             path: Optional[Path] = None):
        """
        Sets the default output directory for command-line runs.

        Parameters
        ----------
        path : str or Path, optional
            The directory to write results to.  Relative paths are kept
            relative so that they resolve against the working directory of
            each run.  If not given, will be asked for in a prompt.
        """
        # Ask for path if not given
        if path is None:
            path = screen_input("Enter the default output directory:")
        self.__content['output_directory'] = Path(path).as_posix()

        # Save changes
        self.save()

    @property
    def default_seed(self) -> int:
        """int: The random seed used when a run configuration gives none"""
        return int(self.__content.get('default_seed', 0))

    def set_default_seed(self,
                         seed: Union[int, str, None] = None):
        """
        Sets the default random seed for synthetic traces and multi-start
        fits.

        Parameters
        ----------
        seed : int, optional
            A non-negative integer seed.  If not given, will be asked for in
            a prompt.
        """
        if seed is None:
            seed = screen_input("Enter the default random seed:")
        try:
            seed = int(seed)
        except (TypeError, ValueError) as err:
            raise ValueError(f'Invalid seed {seed!r}: must be an integer') from err
        if seed < 0:
            raise ValueError('seed must be non-negative')
        self.__content['default_seed'] = seed

        # Save changes
        self.save()

    def reset(self):
        """
        Removes all saved transmonfield values after confirmation.
        """
        keys = [k for k in ['regime_threshold', 'output_directory', 'default_seed']
                if k in self.__content]
        if len(keys) == 0:
            print('No transmonfield settings saved')
            return None

        print(f'Remove saved settings {", ".join(keys)}?')
        test = screen_input('Delete settings? (must type yes):').lower()
        if test == 'yes':
            for key in keys:
                del self.__content[key]

            # Save changes
            self.save()

settings = Settings()
