"""
superfrieze - exact algebra of superfriezes and supersymmetric Hill equations
Main Application Entry Point
"""

from flask import Flask, jsonify
from flask_cors import CORS
from superfrieze import __version__
from superfrieze.api.frieze import frieze_bp
from superfrieze.api.hill import hill_bp
from superfrieze.api.continuant import continuant_bp
from superfrieze.utils.config import config
from superfrieze.utils.logger import logger, setup_logger


def create_app():
    """Create and configure Flask application"""

    app = Flask(__name__)

    # Enable CORS
    CORS(app)

    # Register API blueprints
    app.register_blueprint(frieze_bp, url_prefix='/api/v1/frieze')
    app.register_blueprint(hill_bp, url_prefix='/api/v1/hill')
    app.register_blueprint(continuant_bp, url_prefix='/api/v1/continuant')

    # Root endpoint
    @app.route('/')
    def index():
        return jsonify({
            'name': 'superfrieze',
            'version': __version__,
            'description': 'Superfriezes, supersymmetric Hill equations and supercontinuants',
            'endpoints': {
                'frieze': '/api/v1/frieze',
                'hill': '/api/v1/hill',
                'continuant': '/api/v1/continuant'
            }
        })

    # Health check endpoint
    @app.route('/health')
    def health():
        return jsonify({'status': 'healthy'}), 200

    # API info endpoint
    @app.route('/api/v1')
    def api_info():
        return jsonify({
            'version': 'v1',
            'endpoints': {
                'frieze': {
                    'create': 'POST /api/v1/frieze/create',
                    'from_hill': 'POST /api/v1/frieze/from-hill',
                    'from_diagonal': 'POST /api/v1/frieze/from-diagonal',
                    'load': 'POST /api/v1/frieze/load',
                    'get': 'GET /api/v1/frieze/<id>',
                    'check': 'GET /api/v1/frieze/<id>/check',
                    'render': 'GET /api/v1/frieze/<id>/render',
                    'list': 'GET /api/v1/frieze/list',
                    'delete': 'DELETE /api/v1/frieze/<id>'
                },
                'hill': {
                    'create': 'POST /api/v1/hill/create',
                    'get': 'GET /api/v1/hill/<id>',
                    'monodromy': 'GET /api/v1/hill/<id>/monodromy',
                    'sturm_liouville': 'POST /api/v1/hill/<id>/sturm-liouville',
                    'variety': 'GET /api/v1/hill/variety/<n>',
                    'list': 'GET /api/v1/hill/list',
                    'delete': 'DELETE /api/v1/hill/<id>'
                },
                'continuant': {
                    'symbolic': 'GET /api/v1/continuant/<family>/<n>?method=',
                    'evaluate': 'POST /api/v1/continuant/<family>/<n>',
                    'compare': 'GET /api/v1/continuant/<family>/<n>/compare',
                    'counts': 'GET /api/v1/continuant/counts/<family>/<max_n>'
                }
            }
        })

    # Error handlers
    @app.errorhandler(404)
    def not_found(error):
        return jsonify({'error': 'Not found'}), 404

    @app.errorhandler(500)
    def internal_error(error):
        return jsonify({'error': 'Internal server error'}), 500

    return app


def main():
    """Main entry point"""
    # Load configuration
    config.load_from_file('config.yaml')
    setup_logger('superfrieze', config.get('logging.level', 'INFO'), config.get('logging.file'))

    # Get server configuration
    host = config.get('server.host', '0.0.0.0')
    port = config.get('server.port', 5000)
    debug = config.get('server.debug', False)

    # Create and run application
    app = create_app()

    logger.info(f"Starting superfrieze on {host}:{port}")
    logger.info(f"Debug mode: {debug}")

    app.run(host=host, port=port, debug=debug)


if __name__ == '__main__':
    main()
