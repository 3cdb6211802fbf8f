"""Frieze API routes"""

from flask import Blueprint, request, jsonify
from ..core.frieze_manager import FriezeManager

frieze_bp = Blueprint('frieze', __name__)
frieze_manager = FriezeManager()


@frieze_bp.route('/create', methods=['POST'])
def create_frieze():
    """Create a frieze from its first rows"""
    data = request.get_json(silent=True)

    if not data or 'a' not in data or 'beta' not in data:
        return jsonify({'error': 'a and beta are required'}), 400

    result = frieze_manager.create_frieze(
        data['a'], data['beta'],
        m=data.get('m'), start=data.get('start'), periods=data.get('periods'))

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 201


@frieze_bp.route('/from-hill', methods=['POST'])
def create_from_hill():
    """Create the closed frieze of a Hill equation"""
    data = request.get_json(silent=True)

    if not data or 'a' not in data or 'beta' not in data:
        return jsonify({'error': 'a and beta are required'}), 400

    result = frieze_manager.create_from_hill(data['a'], data['beta'], data.get('start', 1))

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 201


@frieze_bp.route('/from-diagonal', methods=['POST'])
def create_from_diagonal():
    """Create the closed frieze through a given SE diagonal"""
    data = request.get_json(silent=True)

    if not data or 'v' not in data or 'w' not in data:
        return jsonify({'error': 'v and w are required'}), 400

    result = frieze_manager.create_from_diagonal(data['v'], data['w'], data.get('start'))

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 201


@frieze_bp.route('/load', methods=['POST'])
def load_frieze():
    """Store a frieze from its JSON dump"""
    data = request.get_json(silent=True)

    if not data or 'entries' not in data:
        return jsonify({'error': 'a frieze dump with entries is required'}), 400

    result = frieze_manager.load_frieze(data)

    if 'error' in result:
        return jsonify(result), 400

    return jsonify(result), 201


@frieze_bp.route('/<frieze_id>', methods=['GET'])
def get_frieze(frieze_id):
    """Get a frieze with all stored entries"""
    result = frieze_manager.get_frieze(frieze_id)

    if 'error' in result:
        return jsonify(result), 404

    return jsonify(result), 200


@frieze_bp.route('/<frieze_id>/check', methods=['GET'])
def check_frieze(frieze_id):
    """Run the diamond, closure, glide, periodicity and pairing checks"""
    result = frieze_manager.check_frieze(frieze_id)

    if 'error' in result:
        return jsonify(result), 404

    return jsonify(result), 200


@frieze_bp.route('/<frieze_id>/render', methods=['GET'])
def render_frieze(frieze_id):
    """Plaintext layout; optional lo and hi select the diagonals"""
    lo = request.args.get('lo', type=int)
    hi = request.args.get('hi', type=int)
    result = frieze_manager.render_frieze(frieze_id, lo, hi)

    if 'error' in result:
        return jsonify(result), 404

    return jsonify(result), 200


@frieze_bp.route('/list', methods=['GET'])
def list_friezes():
    """List stored friezes"""
    result = frieze_manager.list_friezes()
    return jsonify(result), 200


@frieze_bp.route('/<frieze_id>', methods=['DELETE'])
def delete_frieze(frieze_id):
    """Delete a stored frieze"""
    result = frieze_manager.delete_frieze(frieze_id)

    if 'error' in result:
        return jsonify(result), 404

    return jsonify(result), 200
