"""Hill equation API routes"""

from flask import Blueprint, request, jsonify
from ..core.hill_manager import HillManager

hill_bp = Blueprint('hill', __name__)
hill_manager = HillManager()


@hill_bp.route('/create', methods=['POST'])
def create_system():
    """Create a Hill system from one period of coefficients"""
    data = request.get_json(silent=True)

    if not data or 'a' not in data or 'beta' not in data:
        return jsonify({'error': 'a and beta are required'}), 400

    result = hill_manager.create_system(
        data['a'], data['beta'],
        start=data.get('start', 1), monodromy_base=data.get('monodromy_base'))

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 201


@hill_bp.route('/<hill_id>', methods=['GET'])
def get_system(hill_id):
    """Get a Hill system"""
    result = hill_manager.get_system(hill_id)

    if 'error' in result:
        return jsonify(result), 404

    return jsonify(result), 200


@hill_bp.route('/<hill_id>/monodromy', methods=['GET'])
def get_monodromy(hill_id):
    """Monodromy matrix and the Hill condition; optional base index"""
    base = request.args.get('base', type=int)
    result = hill_manager.get_monodromy(hill_id, base)

    if 'error' in result:
        return jsonify(result), 404

    return jsonify(result), 200


@hill_bp.route('/<hill_id>/sturm-liouville', methods=['POST'])
def apply_operator(hill_id):
    """Apply the Sturm-Liouville operator to a super-sequence"""
    data = request.get_json(silent=True)

    if not data or 'v' not in data or 'w' not in data:
        return jsonify({'error': 'v and w are required'}), 400

    result = hill_manager.apply_operator(
        hill_id, data['v'], data['w'], data.get('lo', 0), data.get('form', 'recurrence'))

    if 'error' in result:
        return jsonify(result), 400 if result['status'] == 'invalid' else 404

    return jsonify(result), 200


@hill_bp.route('/variety/<int:n>', methods=['GET'])
def get_variety(n):
    """Equations of the Hill supervariety for period n"""
    seed = request.args.get('seed', type=int)
    result = hill_manager.variety(n, seed=seed)

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 200


@hill_bp.route('/list', methods=['GET'])
def list_systems():
    """List stored Hill systems"""
    result = hill_manager.list_systems()
    return jsonify(result), 200


@hill_bp.route('/<hill_id>', methods=['DELETE'])
def delete_system(hill_id):
    """Delete a stored Hill system"""
    result = hill_manager.delete_system(hill_id)

    if 'error' in result:
        return jsonify(result), 404

    return jsonify(result), 200
