from fractions import Fraction


def exact(x) -> Fraction:
    """Exact rational value of an int, Fraction, float or mpfr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    a, b = x.as_integer_ratio()
    return Fraction(int(a), int(b))
