# coding: utf-8
# Standard Python libraries
from typing import Optional

# Local imports
from ..errors import ValidationError

__all__ = ['JunctionGeometry']

class JunctionGeometry():
    """
    Dimensions setting the flux-capture area (d + 2λ_L)·l of a junction.
    All lengths in nm.
    """
    def __init__(self,
                 barrier_thickness: float = 1.0,
                 london_depth: float = 16.0,
                 length: Optional[float] = None):
        self.barrier_thickness = barrier_thickness
        self.london_depth = london_depth
        self.length = length

    def __repr__(self) -> str:
        return (f'JunctionGeometry(barrier_thickness={self.barrier_thickness}, '
                f'london_depth={self.london_depth}, length={self.length})')

    @staticmethod
    def __positive(name: str, value: float) -> float:
        value = float(value)
        if not 0 < value < float('inf'):
            raise ValidationError(f'{name} must be positive and finite, got {value}')
        return value

    @property
    def barrier_thickness(self) -> float:
        """float: Tunnel barrier thickness d in nm"""
        return self.__barrier_thickness

    @barrier_thickness.setter
    def barrier_thickness(self, value: float):
        self.__barrier_thickness = self.__positive('barrier_thickness', value)

    @property
    def london_depth(self) -> float:
        """float: London penetration depth λ_L in nm"""
        return self.__london_depth

    @london_depth.setter
    def london_depth(self, value: float):
        self.__london_depth = self.__positive('london_depth', value)

    @property
    def length(self) -> Optional[float]:
        """float or None: Junction length l in nm perpendicular to the field"""
        return self.__length

    @length.setter
    def length(self, value: Optional[float]):
        if value is None:
            self.__length = None
        else:
            self.__length = self.__positive('length', value)

    @property
    def magnetic_thickness(self) -> float:
        """float: d + 2λ_L in nm"""
        return self.barrier_thickness + 2.0 * self.london_depth
