"""
Parsers for the compact divisor and point-map grammars
"""

import re
from typing import Dict, List, Tuple

from app.utils.validators import validate_point_token

DIVISOR_TERM = re.compile(r"\s*([+-]?)\s*(\d+)\s*\*\s*([A-Za-z_][A-Za-z0-9_.']*)\s*")


def parse_divisor(text: str) -> List[Tuple[str, int]]:
    """Parse "2*P1-1*P2" into [("P1", 2), ("P2", -1)].

    Repeated points are kept as separate entries; the first term may omit
    its sign, later terms may not.
    """
    terms: List[Tuple[str, int]] = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = DIVISOR_TERM.match(text, position)
        if not match or match.end() == position:
            raise ValueError(f"Cannot parse divisor near {text[position:]!r}")
        sign, coefficient, token = match.groups()
        if terms and not sign:
            raise ValueError(f"Missing sign before term {match.group(0).strip()!r}")
        multiplicity = int(coefficient)
        terms.append((token, -multiplicity if sign == "-" else multiplicity))
        position = match.end()
    return terms


def parse_point_map(text: str) -> Dict[str, str]:
    """Parse "P1:Q1,P2:Q2" into {"P1": "Q1", "P2": "Q2"}"""
    mapping: Dict[str, str] = {}
    for pair in filter(None, (chunk.strip() for chunk in text.split(","))):
        source, sep, target = pair.partition(":")
        source, target = source.strip(), target.strip()
        if not sep or not validate_point_token(source) or not validate_point_token(target):
            raise ValueError(f"Invalid point map entry {pair!r}")
        if source in mapping and mapping[source] != target:
            raise ValueError(f"Point {source} mapped twice")
        mapping[source] = target
    return mapping
