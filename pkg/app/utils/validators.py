"""
Validation utilities
"""

import re

POINT_TOKEN_PATTERN = r"^[A-Za-z_][A-Za-z0-9_.']*$"


def is_prime(n: int) -> bool:
    """Primality by trial division"""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


def validate_point_token(token: str) -> bool:
    """Validate an opaque point identifier such as P1 or Q_2"""
    return bool(re.match(POINT_TOKEN_PATTERN, token))
