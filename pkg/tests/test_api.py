"""Tests for the superfrieze REST API"""

import sys
import os
import json

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest

SAMPLES = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'samples'))


@pytest.fixture
def client():
    from app import create_app

    app = create_app()
    app.config['TESTING'] = True
    return app.test_client()


def _sample(name):
    with open(os.path.join(SAMPLES, name)) as f:
        return json.load(f)


def test_index_and_health(client):
    response = client.get('/health')
    assert response.status_code == 200
    assert response.get_json()['status'] == 'healthy'

    info = client.get('/').get_json()
    assert info['name'] == 'superfrieze'
    assert info['endpoints']['frieze'] == '/api/v1/frieze'

    print("✓ Index and health test passed")


def test_frieze_lifecycle(client):
    """Create from first rows, check, render, list and delete"""
    sample = _sample('pentagramma.json')
    response = client.post('/api/v1/frieze/create', json={
        'a': sample['a'], 'beta': sample['beta'], 'start': sample['start']})
    assert response.status_code == 201
    created = response.get_json()
    assert created['status'] == 'created'
    assert created['m'] == 2
    frieze_id = created['frieze_id']

    report = client.get(f'/api/v1/frieze/{frieze_id}/check').get_json()
    assert report['all_pass']
    assert report['frieze_id'] == frieze_id

    text = client.get(f'/api/v1/frieze/{frieze_id}/render').get_json()['text']
    assert 'x' in text

    dump = client.get(f'/api/v1/frieze/{frieze_id}').get_json()['frieze']
    reloaded = client.post('/api/v1/frieze/load', json=dump)
    assert reloaded.status_code == 201
    assert reloaded.get_json()['source'] == 'dump'

    listing = client.get('/api/v1/frieze/list').get_json()
    assert frieze_id in [f['id'] for f in listing['friezes']]

    assert client.delete(f'/api/v1/frieze/{frieze_id}').get_json()['status'] == 'deleted'
    assert client.get(f'/api/v1/frieze/{frieze_id}').status_code == 404

    print("✓ Frieze lifecycle test passed")


def test_frieze_from_hill_and_diagonal(client):
    sample = _sample('width1.json')
    response = client.post('/api/v1/frieze/from-hill', json={
        'a': sample['a'], 'beta': sample['beta'], 'start': 0})
    assert response.status_code == 201
    created = response.get_json()
    assert created['source'] == 'hill'
    assert created['m'] == 1

    # period 3 leaves no room for a frieze
    response = client.post('/api/v1/frieze/from-hill', json={
        'a': ['1', '1', '1'], 'beta': ['-beta', 'beta', '-beta']})
    assert response.status_code == 400

    response = client.post('/api/v1/frieze/from-diagonal', json={
        'v': ['x', 'y'], 'w': ['xi', 'eta', 'zeta']})
    assert response.status_code == 201
    assert response.get_json()['m'] == 2

    print("✓ Frieze from Hill and diagonal test passed")


def test_frieze_errors(client):
    assert client.post('/api/v1/frieze/create', json={'a': ['1']}).status_code == 400

    response = client.post('/api/v1/frieze/create', json={'a': ['1', '2.5', '1', '1'],
                                                          'beta': ['0', '0', '0', '0']})
    assert response.status_code == 400
    assert response.get_json()['status'] == 'invalid'

    assert client.get('/api/v1/frieze/frz_missing/check').status_code == 404

    print("✓ Frieze error test passed")


def test_hill_endpoints(client):
    response = client.post('/api/v1/hill/create', json={
        'a': ['1', '1', '1'], 'beta': ['-beta', 'beta', '-beta']})
    assert response.status_code == 201
    hill_id = response.get_json()['hill_id']

    result = client.get(f'/api/v1/hill/{hill_id}/monodromy').get_json()
    assert result['hill_condition'] is True
    assert result['text'][2][2] == '1'

    response = client.post(f'/api/v1/hill/{hill_id}/sturm-liouville', json={
        'v': ['V0', 'V1', 'V2', 'V3'], 'w': ['W0', 'W1', 'W2', 'W3'], 'lo': 0})
    assert response.status_code == 200
    assert response.get_json()['form'] == 'recurrence'

    response = client.post(f'/api/v1/hill/{hill_id}/sturm-liouville', json={
        'v': ['V0'], 'w': ['W0']})
    assert response.status_code == 400

    variety = client.get('/api/v1/hill/variety/4?seed=3').get_json()
    assert len(variety['published']) == 8
    assert variety['verified'] is True

    assert client.get('/api/v1/hill/hill_missing/monodromy').status_code == 404

    print("✓ Hill endpoint test passed")


def test_continuant_endpoints(client):
    from superfrieze.core.expression import parse_superscalar

    result = client.get('/api/v1/continuant/even/3').get_json()
    assert result['terms'] == 6

    result = client.get('/api/v1/continuant/odd/4/compare').get_json()
    assert result['agree'] is True
    assert 'berezinian' not in result['methods']

    result = client.post('/api/v1/continuant/even/2', json={'a': [2, 3], 'beta': ['xi', 'eta']})
    assert result.status_code == 200
    assert parse_superscalar(result.get_json()['text']) == parse_superscalar('5 + xi eta')

    result = client.get('/api/v1/continuant/counts/odd/5').get_json()
    assert result['counts'] == [1, 2, 5, 11, 25]

    assert client.get('/api/v1/continuant/triple/3').status_code == 400
    assert client.get('/api/v1/continuant/counts/even/40').status_code == 400

    print("✓ Continuant endpoint test passed")


if __name__ == '__main__':
    print("Running superfrieze API tests...\n")
    from app import create_app
    test_client = create_app().test_client()
    test_index_and_health(test_client)
    test_frieze_lifecycle(test_client)
    test_frieze_from_hill_and_diagonal(test_client)
    test_frieze_errors(test_client)
    test_hill_endpoints(test_client)
    test_continuant_endpoints(test_client)
    print("\n✓ All tests passed!")
