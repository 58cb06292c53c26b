# coding: utf-8

__all__ = ['LossBudget']

class LossBudget():
    """
    Decomposition Γ₁ = Γ_hyst + Γ_non-hyst + Γ_const of one decay rate, in kHz.
    """
    def __init__(self,
                 gamma_hyst: float,
                 gamma_nonhyst: float,
                 gamma_const: float,
                 b: float = float('nan'),
                 direction: str = 'up'):
        for name, value in (('gamma_hyst', gamma_hyst), ('gamma_nonhyst', gamma_nonhyst),
                            ('gamma_const', gamma_const)):
            if not value >= 0:
                raise ValueError(f'{name} must be non-negative, got {value}')
        self.__gamma_hyst = float(gamma_hyst)
        self.__gamma_nonhyst = float(gamma_nonhyst)
        self.__gamma_const = float(gamma_const)
        self.__b = float(b)
        self.__direction = direction

    def __repr__(self) -> str:
        return (f'LossBudget(gamma_hyst={self.gamma_hyst:.6g}, '
                f'gamma_nonhyst={self.gamma_nonhyst:.6g}, gamma_const={self.gamma_const:.6g})')

    @property
    def gamma_hyst(self) -> float:
        """float: Hysteretic part in kHz"""
        return self.__gamma_hyst

    @property
    def gamma_nonhyst(self) -> float:
        """float: Non-hysteretic, field-dependent part in kHz"""
        return self.__gamma_nonhyst

    @property
    def gamma_const(self) -> float:
        """float: Field-independent part in kHz"""
        return self.__gamma_const

    @property
    def b(self) -> float:
        """float: Field in mT the budget belongs to"""
        return self.__b

    @property
    def direction(self) -> str:
        """str: Sweep direction tag"""
        return self.__direction

    @property
    def total(self) -> float:
        """float: Sum of the three parts in kHz"""
        return self.gamma_hyst + self.gamma_nonhyst + self.gamma_const

    def metadata(self) -> dict:
        """
        Generates a dict of simple metadata values.
        """
        return {'b_mT': self.b,
                'direction': self.direction,
                'gamma_hyst_kHz': self.gamma_hyst,
                'gamma_nonhyst_kHz': self.gamma_nonhyst,
                'gamma_const_kHz': self.gamma_const,
                'gamma_total_kHz': self.total}
