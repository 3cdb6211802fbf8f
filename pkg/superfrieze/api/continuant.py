"""Continuant API routes"""

from flask import Blueprint, request, jsonify
from ..core.continuant_manager import ContinuantManager

continuant_bp = Blueprint('continuant', __name__)
continuant_manager = ContinuantManager()


@continuant_bp.route('/<family>/<int:n>', methods=['GET'])
def get_continuant(family, n):
    """Symbolic supercontinuant; ?method= selects the computation"""
    method = request.args.get('method', 'recurrence')
    result = continuant_manager.compute(family, n, method)

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 200


@continuant_bp.route('/<family>/<int:n>', methods=['POST'])
def evaluate_continuant(family, n):
    """Supercontinuant of given entries"""
    data = request.get_json(silent=True)

    if not data or 'a' not in data or 'beta' not in data:
        return jsonify({'error': 'a and beta are required'}), 400

    result = continuant_manager.compute(family, n, data.get('method', 'recurrence'),
                                        a=data['a'], beta=data['beta'])

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 200


@continuant_bp.route('/<family>/<int:n>/compare', methods=['GET'])
def compare_methods(family, n):
    """All methods side by side with an agreement flag"""
    result = continuant_manager.compare_methods(family, n)

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 200


@continuant_bp.route('/counts/<family>/<int:max_n>', methods=['GET'])
def get_counts(family, max_n):
    """Term counts for n = 1..max_n"""
    result = continuant_manager.counts(family, max_n)

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 200
