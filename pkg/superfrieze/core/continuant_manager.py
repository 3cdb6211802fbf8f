"""Continuant Manager - supercontinuant computation module"""

from typing import Any, Dict, Optional, Tuple

from .continuants import (
    ContinuantSpec, Family, cross_check, methods_for, supercontinuant, term_counts,
)
from .expression import coerce_scalars
from .frieze_manager import INPUT_ERRORS, invalid
from .grassmann import SuperScalar
from ..utils.config import config
from ..utils.logger import logger


def scalar_result(value: SuperScalar) -> Dict[str, Any]:
    return {'value': value.to_dict(), 'text': str(value), 'terms': len(value)}


class ContinuantManager:
    """Computes supercontinuants; symbolic results are cached per (family, n, method)"""

    def __init__(self):
        self.cache: Dict[Tuple[str, int, str], SuperScalar] = {}
        logger.info("ContinuantManager initialized")

    def _spec(self, family: str, n: int, a: Any = None, beta: Any = None) -> ContinuantSpec:
        fam = Family.parse(family)
        n = int(n)
        max_n = config.get('continuants.max_n', 11)
        if n > max_n:
            raise ValueError(f"n={n} exceeds continuants.max_n={max_n}")
        if a is None and beta is None:
            return ContinuantSpec.symbolic(fam, n)
        return ContinuantSpec(fam, n, tuple(coerce_scalars(a)), tuple(coerce_scalars(beta)))

    def compute(
        self,
        family: str,
        n: int,
        method: str = 'recurrence',
        a: Optional[Any] = None,
        beta: Optional[Any] = None
    ) -> Dict[str, Any]:
        """Evaluate one supercontinuant

        Args:
            family: 'even', 'odd' or 'bracket'
            n: Length
            method: recurrence, euler, determinant or berezinian (even family only)
            a: Optional even entries; free symbols a_1..a_n if omitted
            beta: Optional odd entries; free symbols b_1..b_n if omitted

        Returns:
            Dictionary with the value as JSON and text, and its term count
        """
        try:
            spec = self._spec(family, n, a, beta)
            key = (spec.family.value, spec.n, method)
            symbolic = a is None and beta is None
            value = self.cache.get(key) if symbolic else None
            if value is None:
                value = supercontinuant(spec, method)
                if symbolic:
                    self.cache[key] = value
        except INPUT_ERRORS as e:
            return invalid(e)

        logger.info(f"Computed {spec.family.value} supercontinuant n={spec.n} by {method}")
        result = {'family': spec.family.value, 'n': spec.n, 'method': method}
        result.update(scalar_result(value))
        return result

    def compare_methods(self, family: str, n: int) -> Dict[str, Any]:
        """Every applicable method side by side"""
        try:
            spec = self._spec(family, n)
            check = cross_check(spec)
        except INPUT_ERRORS as e:
            return invalid(e)
        return {
            'family': spec.family.value,
            'n': spec.n,
            'methods': list(methods_for(spec.family)),
            'values': {m: str(v) for m, v in check['values'].items()},
            'agree': check['agree'],
        }

    def counts(self, family: str, max_n: int) -> Dict[str, Any]:
        """Term counts for n = 1..max_n"""
        try:
            fam = Family.parse(family)
            limit = config.get('continuants.max_n', 11)
            if int(max_n) > limit:
                raise ValueError(f"max_n={max_n} exceeds continuants.max_n={limit}")
            values = term_counts(fam, int(max_n))
        except INPUT_ERRORS as e:
            return invalid(e)
        return {'family': fam.value, 'max_n': int(max_n), 'counts': values}
