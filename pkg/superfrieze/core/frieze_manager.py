"""Frieze Manager - Core frieze session management module"""

import uuid
from datetime import datetime
from typing import Any, Dict, List, Mapping, Optional

from .expression import coerce_scalars
from .frieze import (
    Superfrieze, check_report, frieze_from_first_rows, frieze_from_hill,
    laurent_expand, render,
)
from .hill import HillCoefficients, HillSystem
from ..utils.errors import SuperFriezeError
from ..utils.logger import logger

INPUT_ERRORS = (SuperFriezeError, KeyError, TypeError, ValueError)


def invalid(error: Exception) -> Dict[str, Any]:
    """Result dict for rejected input"""
    return {'error': str(error), 'status': 'invalid'}


class FriezeRecord:
    """A stored frieze and where it came from"""

    def __init__(self, frieze_id: str, frieze: Superfrieze, source: str):
        self.id = frieze_id
        self.frieze = frieze
        self.source = source
        self.created_at = datetime.now()

    def to_dict(self) -> Dict[str, Any]:
        coeffs = self.frieze.first_rows()
        return {
            'id': self.id,
            'source': self.source,
            'm': self.frieze.m,
            'n': self.frieze.n,
            'start': self.frieze.start,
            'diagonals': list(self.frieze.diagonals),
            'a': [str(x) for x in coeffs.a],
            'beta': [str(x) for x in coeffs.beta],
            'created_at': self.created_at.isoformat(),
        }


class FriezeManager:
    """Keeps superfriezes built from first rows, diagonals, Hill data or dumps"""

    def __init__(self):
        self.friezes: Dict[str, FriezeRecord] = {}
        logger.info("FriezeManager initialized")

    def _store(self, frieze: Superfrieze, source: str) -> Dict[str, Any]:
        frieze_id = f"frz_{uuid.uuid4().hex[:8]}"
        record = FriezeRecord(frieze_id, frieze, source)
        self.friezes[frieze_id] = record
        logger.info(f"Created frieze {frieze_id} of width {frieze.m} from {source}")
        result = record.to_dict()
        result['frieze_id'] = frieze_id
        result['status'] = 'created'
        return result

    def create_frieze(
        self,
        a: Any,
        beta: Any,
        m: Optional[int] = None,
        start: Optional[int] = None,
        periods: Optional[int] = None
    ) -> Dict[str, Any]:
        """Build a frieze from its first even and odd rows

        Args:
            a: Even first row, as expressions or JSON scalars
            beta: Odd first row
            m: Width; defaults to len(a) - 3
            start: Index of a[0]
            periods: Number of periods to store

        Returns:
            Dictionary containing frieze_id and a summary
        """
        try:
            a_vals = coerce_scalars(a)
            beta_vals = coerce_scalars(beta)
            width = len(a_vals) - 3 if m is None else int(m)
            frieze = frieze_from_first_rows(a_vals, beta_vals, width, start, periods)
        except INPUT_ERRORS as e:
            return invalid(e)
        return self._store(frieze, 'first_rows')

    def create_from_hill(self, a: Any, beta: Any, start: int = 1) -> Dict[str, Any]:
        """Build the closed frieze of a Hill equation with the given coefficients"""
        try:
            coeffs = HillCoefficients(tuple(coerce_scalars(a)), tuple(coerce_scalars(beta)), int(start))
            frieze = frieze_from_hill(HillSystem(coeffs))
        except INPUT_ERRORS as e:
            return invalid(e)
        return self._store(frieze, 'hill')

    def create_from_diagonal(self, v: Any, w: Any, start: Optional[int] = None) -> Dict[str, Any]:
        """Build the closed frieze through an SE diagonal (v, w)"""
        try:
            frieze = laurent_expand(coerce_scalars(v), coerce_scalars(w), start)
        except INPUT_ERRORS as e:
            return invalid(e)
        return self._store(frieze, 'diagonal')

    def load_frieze(self, dump: Mapping[str, Any]) -> Dict[str, Any]:
        """Store a frieze from its JSON dump"""
        try:
            frieze = Superfrieze.from_dict(dump)
        except INPUT_ERRORS as e:
            return invalid(e)
        return self._store(frieze, 'dump')

    def get_frieze(self, frieze_id: str) -> Dict[str, Any]:
        """Summary plus the full entry dump"""
        if frieze_id not in self.friezes:
            return {'error': 'Frieze not found', 'status': 'error'}

        record = self.friezes[frieze_id]
        result = record.to_dict()
        result['frieze'] = record.frieze.to_dict()
        return result

    def check_frieze(self, frieze_id: str) -> Dict[str, Any]:
        """Run every frieze check

        Returns:
            Report with pass/fail and first counterexample per check
        """
        if frieze_id not in self.friezes:
            return {'error': 'Frieze not found', 'status': 'error'}

        report = check_report(self.friezes[frieze_id].frieze)
        logger.info(f"Checked frieze {frieze_id}: all_pass={report['all_pass']}")
        report['frieze_id'] = frieze_id
        return report

    def render_frieze(self, frieze_id: str, lo: Optional[int] = None,
                      hi: Optional[int] = None) -> Dict[str, Any]:
        if frieze_id not in self.friezes:
            return {'error': 'Frieze not found', 'status': 'error'}

        frieze = self.friezes[frieze_id].frieze
        window = None if lo is None or hi is None else (int(lo), int(hi))
        return {'frieze_id': frieze_id, 'text': render(frieze, window)}

    def list_friezes(self) -> Dict[str, Any]:
        records: List[Dict[str, Any]] = [record.to_dict() for record in self.friezes.values()]
        return {'friezes': records, 'count': len(records)}

    def delete_frieze(self, frieze_id: str) -> Dict[str, Any]:
        if frieze_id not in self.friezes:
            return {'error': 'Frieze not found', 'status': 'error'}

        del self.friezes[frieze_id]
        logger.info(f"Deleted frieze {frieze_id}")

        return {
            'frieze_id': frieze_id,
            'status': 'deleted'
        }
