"""
Derived Constants - Volume, simplicial volume and Milnor-Wood bounds from the norm bracket
"""
from fractions import Fraction

from .exact_arith import PiValue
from .paper import theorem_bounds

VOLUME_PER_CHI = Fraction(8, 3)
EULER_CLASS_NORM = Fraction(1, 2 ** 4)
CP2_CHI = 3
# The simplicial-volume bracket is stated once with upper coefficient 9/(4 pi^2);
# 9/pi^2 is the value that agrees with ||M|| <= 24 chi(M).
UPPER_COEFFICIENT_ERRATUM = "simplicial volume upper coefficient: 9/pi^2 (not 9/(4*pi^2)); consistent with ||M|| <= 24*chi(M)"


def derived_constants(chi: int) -> dict:
    """
    Constants for a closed complex hyperbolic surface with Euler characteristic chi

    Args:
        chi: Euler characteristic, a positive integer

    Returns:
        Dictionary with the volume, the omega-norm and simplicial-volume
        intervals, the Milnor-Wood bound and the CP^2 reference data

    Raises:
        ValueError: if chi is not a positive integer
    """
    if isinstance(chi, bool) or not isinstance(chi, int) or chi < 1:
        raise ValueError(f"chi must be a positive integer, got {chi!r}")
    lower, upper = theorem_bounds()
    # omega = (1/2) c_phi u c_phi
    omega_lower = lower / 2
    omega_upper = upper / 2
    volume = PiValue.exact(VOLUME_PER_CHI * chi, 2)
    # ||M|| = Vol(M) / ||omega||
    simplicial_lower = volume.coefficient / omega_upper.coefficient
    simplicial_upper = volume.coefficient / omega_lower.coefficient
    milnor_wood = EULER_CLASS_NORM * simplicial_upper
    return {
        'chi': chi,
        'volume': volume,
        'omega_norm': (omega_lower, omega_upper),
        'cup_square_norm': (lower, upper),
        'simplicial_volume': (simplicial_lower, simplicial_upper),
        'simplicial_volume_per_chi': (simplicial_lower / chi, simplicial_upper / chi),
        'euler_class_norm': EULER_CLASS_NORM,
        'milnor_wood': milnor_wood,
        'milnor_wood_per_chi': milnor_wood / chi,
        'cp2_volume': PiValue.exact(VOLUME_PER_CHI * CP2_CHI, 2),
        'cp2_chi': CP2_CHI,
        'erratum': UPPER_COEFFICIENT_ERRATUM,
    }


def format_constants(result: dict) -> str:
    omega_lower, omega_upper = result['omega_norm']
    norm_lower, norm_upper = result['simplicial_volume']
    lines = [
        f"chi: {result['chi']}",
        f"volume: {result['volume']}",
        f"cup square norm: [{result['cup_square_norm'][0]}, {result['cup_square_norm'][1]}]",
        f"omega norm: [{omega_lower}, {omega_upper}]",
        f"simplicial volume: [{norm_lower}, {norm_upper}]",
        f"euler class norm: {result['euler_class_norm']}",
        f"milnor-wood bound: |chi(xi)| <= {result['milnor_wood']}",
        f"CP^2: volume {result['cp2_volume']}, chi {result['cp2_chi']}",
        f"note: {result['erratum']}",
    ]
    return "\n".join(lines)


def print_constants(chi: int) -> dict:
    """Print the derived constants for chi"""
    result = derived_constants(chi)
    print(f"[OK] Derived constants for chi = {chi}")
    print(format_constants(result))
    return result
