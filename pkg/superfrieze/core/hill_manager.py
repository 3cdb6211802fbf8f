"""Hill Manager - Core Hill equation management module"""

import uuid
from datetime import datetime
from typing import Any, Dict, Optional

from .expression import coerce_scalars
from .frieze_manager import INPUT_ERRORS, invalid
from .hill import (
    HillCoefficients, HillSystem, SuperSequencePair, apply_sturm_liouville,
    apply_sturm_liouville_operator_form, check_hill_condition, monodromy,
    supervariety_equations,
)
from .variety import PUBLISHED, published_equations, verify_published
from ..utils.errors import DimensionMismatch
from ..utils.logger import logger

FORMS = ('recurrence', 'operator')


def sequence_to_dict(s: SuperSequencePair) -> Dict[str, Any]:
    """Sequence with printable values next to the JSON form"""
    result = s.to_dict()
    result['v_text'] = [str(x) for x in s.v]
    result['w_text'] = [str(x) for x in s.w]
    return result


class HillRecord:
    """A stored Hill system"""

    def __init__(self, hill_id: str, system: HillSystem):
        self.id = hill_id
        self.system = system
        self.created_at = datetime.now()

    def to_dict(self) -> Dict[str, Any]:
        coeffs = self.system.coeffs
        return {
            'id': self.id,
            'n': coeffs.n,
            'start': coeffs.start,
            'monodromy_base': self.system.monodromy_base,
            'a': [str(x) for x in coeffs.a],
            'beta': [str(x) for x in coeffs.beta],
            'created_at': self.created_at.isoformat(),
        }


class HillManager:
    """Manages supersymmetric Hill equations and their monodromy"""

    def __init__(self):
        self.systems: Dict[str, HillRecord] = {}
        logger.info("HillManager initialized")

    def create_system(
        self,
        a: Any,
        beta: Any,
        start: int = 1,
        monodromy_base: Optional[int] = None
    ) -> Dict[str, Any]:
        """Create a Hill system from one period of coefficients

        Args:
            a: Even coefficients a_start..a_{start+n-1}
            beta: Odd coefficients
            start: Index of the first coefficient
            monodromy_base: Index i of the default monodromy M_i

        Returns:
            Dictionary containing hill_id and a summary
        """
        try:
            coeffs = HillCoefficients(tuple(coerce_scalars(a)), tuple(coerce_scalars(beta)), int(start))
            system = HillSystem(coeffs, monodromy_base)
        except INPUT_ERRORS as e:
            return invalid(e)

        hill_id = f"hill_{uuid.uuid4().hex[:8]}"
        record = HillRecord(hill_id, system)
        self.systems[hill_id] = record
        logger.info(f"Created Hill system {hill_id} with period {coeffs.n}")

        result = record.to_dict()
        result['hill_id'] = hill_id
        result['status'] = 'created'
        return result

    def get_system(self, hill_id: str) -> Dict[str, Any]:
        if hill_id not in self.systems:
            return {'error': 'Hill system not found', 'status': 'error'}

        record = self.systems[hill_id]
        result = record.to_dict()
        result['system'] = record.system.to_dict()
        return result

    def get_monodromy(self, hill_id: str, base: Optional[int] = None) -> Dict[str, Any]:
        """Monodromy matrix and whether it equals diag(-1, -1, 1)

        Args:
            hill_id: ID of the Hill system
            base: Index i of M_i; the system default if omitted
        """
        if hill_id not in self.systems:
            return {'error': 'Hill system not found', 'status': 'error'}

        system = self.systems[hill_id].system
        M = monodromy(system, base)
        hill = check_hill_condition(M)
        logger.info(f"Computed monodromy of {hill_id}: hill_condition={hill}")
        return {
            'hill_id': hill_id,
            'base': system.monodromy_base if base is None else base,
            'monodromy': M.to_dict(),
            'text': [[str(M[r, c]) for c in range(M.cols)] for r in range(M.rows)],
            'hill_condition': hill,
        }

    def apply_operator(self, hill_id: str, v: Any, w: Any, lo: int,
                       form: str = 'recurrence') -> Dict[str, Any]:
        """Apply the Sturm-Liouville operator of a stored system to V + xi W

        Args:
            hill_id: ID of the Hill system
            v: Even part of the sequence on [lo, lo + len(v) - 1]
            w: Odd part, same window
            lo: First index of the window
            form: 'recurrence' or 'operator' (the T^3 + U T^2 + Pi assembly)
        """
        if hill_id not in self.systems:
            return {'error': 'Hill system not found', 'status': 'error'}
        if form not in FORMS:
            return invalid(ValueError(f"form must be one of {FORMS}"))

        coeffs = self.systems[hill_id].system.coeffs
        try:
            s = SuperSequencePair(int(lo), tuple(coerce_scalars(v)), tuple(coerce_scalars(w)))
            if form == 'recurrence':
                result = apply_sturm_liouville(coeffs, s)
            else:
                result = apply_sturm_liouville_operator_form(coeffs, s)
        except INPUT_ERRORS as e:
            return invalid(e)
        return {'hill_id': hill_id, 'form': form, 'result': sequence_to_dict(result)}

    def variety(self, n: int, seed: Optional[int] = None,
                samples: Optional[int] = None) -> Dict[str, Any]:
        """Raw monodromy equations and, for small n, the published forms

        Returns:
            Dictionary with the equations as text and a substitution-verified
            flag (None when no published form exists)
        """
        try:
            equations = supervariety_equations(int(n))
        except INPUT_ERRORS as e:
            return invalid(e)
        result: Dict[str, Any] = {
            'n': n,
            'equations': [str(eq) for eq in equations],
            'published': None,
            'verified': None,
        }
        if n in PUBLISHED:
            try:
                check = verify_published(n, seed, samples)
            except (DimensionMismatch, ValueError) as e:
                return invalid(e)
            result['published'] = [str(eq) for eq in published_equations(n)]
            result['verified'] = check['verified']
        return result

    def list_systems(self) -> Dict[str, Any]:
        return {
            'systems': [record.to_dict() for record in self.systems.values()],
            'count': len(self.systems)
        }

    def delete_system(self, hill_id: str) -> Dict[str, Any]:
        if hill_id not in self.systems:
            return {'error': 'Hill system not found', 'status': 'error'}

        del self.systems[hill_id]
        logger.info(f"Deleted Hill system {hill_id}")

        return {
            'hill_id': hill_id,
            'status': 'deleted'
        }
