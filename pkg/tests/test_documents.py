import json
from fractions import Fraction

import pytest
from hypothesis import given

from hessenberg_unitaries.construction import (HessenbergUnitary,
                                               Mode,
                                               build)
from hessenberg_unitaries.core.constants import Format
from hessenberg_unitaries.core.documents import (MatrixDocument,
                                                 detect_format,
                                                 parse_documents,
                                                 recovery_to_json,
                                                 render_documents,
                                                 report_to_json)
from hessenberg_unitaries.core.errors import DocumentError
from hessenberg_unitaries.inversion import (recover,
                                            synthesize_first_row)
from hessenberg_unitaries.radicals import Radical
from hessenberg_unitaries.verification import verify_float
from tests import strategies

PROVENANCE = {'command': 'gen', 'n': 3, 'z': ['1/2', '2/3']}


@given(strategies.exact_matrices)
def test_basic(matrix: HessenbergUnitary) -> None:
    result = MatrixDocument.from_matrix(matrix)

    assert isinstance(result, MatrixDocument)
    assert result.size == matrix.size
    assert result.mode is Mode.EXACT
    assert len(result.entries) == matrix.size ** 2
    assert result.to_matrix() == matrix


@given(strategies.exact_matrices)
def test_exact_json(matrix: HessenbergUnitary) -> None:
    document = MatrixDocument.from_matrix(matrix,
                                          provenance=PROVENANCE)

    raw = json.loads(json.dumps(document.to_json()))

    assert all(isinstance(entry, str) for entry in raw['entries'])
    assert MatrixDocument.from_json(raw) == document


@given(strategies.float_matrices)
def test_float_json(matrix: HessenbergUnitary) -> None:
    document = MatrixDocument.from_matrix(matrix)

    assert parse_documents(render_documents([document],
                                            Format.JSON)) == [document]


@given(strategies.exact_matrices)
def test_exact_text(matrix: HessenbergUnitary) -> None:
    document = MatrixDocument.from_matrix(matrix,
                                          provenance=PROVENANCE)

    assert parse_documents(render_documents([document],
                                            Format.TEXT)) == [document]


@given(strategies.float_matrices)
def test_float_text(matrix: HessenbergUnitary) -> None:
    document = MatrixDocument.from_matrix(matrix)

    assert parse_documents(render_documents([document],
                                            Format.TEXT)) == [document]


@given(strategies.float_matrices)
def test_csv(matrix: HessenbergUnitary) -> None:
    document = MatrixDocument(matrix.size, Mode.FLOAT,
                              matrix.entries.ravel().tolist())

    assert parse_documents(render_documents([document],
                                            Format.CSV)) == [document]


def test_streams() -> None:
    documents = [MatrixDocument.from_matrix(build((0, 0), Mode.EXACT)),
                 MatrixDocument.from_matrix(build((Fraction(1, 2),),
                                                  Mode.EXACT))]

    for format_ in (Format.JSON, Format.TEXT):
        assert parse_documents(render_documents(documents,
                                                format_)) == documents
    assert len(parse_documents('{"n": 1, "mode": "float", "entries": [1]}'
                               '{"n": 1, "mode": "float", '
                               '"entries": [-1]}')) == 2


@pytest.mark.parametrize('mode', [Mode.EXACT, Mode.FLOAT])
@pytest.mark.parametrize('format_', [Format.JSON, Format.TEXT])
def test_free_parameters(mode: Mode, format_: Format) -> None:
    parameters = synthesize_first_row([1, 0, 0, 0])
    document = MatrixDocument.from_matrix(build(parameters, mode))

    [result] = parse_documents(render_documents([document], format_))

    assert result == document
    assert result.params.free == {1, 2}


def test_text_without_headers() -> None:
    [exact_document] = parse_documents('1 0\n0 -1\n')
    [float_document] = parse_documents('0.6 0.8\n-0.8 0.6\n')

    assert exact_document.mode is Mode.EXACT
    assert exact_document.entries == (Radical(1, 1), Radical(0, 0),
                                      Radical(0, 0), Radical(-1, 1))
    assert float_document.mode is Mode.FLOAT
    assert float_document.entries == (0.6, 0.8, -0.8, 0.6)


def test_detect_format() -> None:
    assert detect_format(' {"n": 1}') is Format.JSON
    assert detect_format('1,0\n0,1\n') is Format.CSV
    assert detect_format('1 0\n0 1\n') is Format.TEXT
    assert detect_format('# provenance: {"a": 1, "b": 2}\n1\n') is Format.TEXT


@pytest.mark.parametrize('raw', [[],
                                 {'mode': 'float', 'entries': [1]},
                                 {'n': 1, 'mode': 'float', 'entries': [1],
                                  'extra': 0},
                                 {'n': 1, 'mode': 'complex', 'entries': [1]},
                                 {'n': 1, 'mode': 'float', 'entries': 1},
                                 {'n': 1, 'mode': 'float',
                                  'entries': ['one']},
                                 {'n': 1, 'mode': 'float', 'entries': [True]},
                                 {'n': 1, 'mode': 'exact',
                                  'entries': ['sqrt(x)']},
                                 {'n': 2, 'mode': 'float', 'entries': [1]},
                                 {'n': True, 'mode': 'float', 'entries': [1]},
                                 {'n': 0, 'mode': 'float', 'entries': []},
                                 {'n': 2, 'mode': 'float',
                                  'entries': [1, 0, 0, 1],
                                  'params': [0.5, 0.5]},
                                 {'n': 2, 'mode': 'float',
                                  'entries': [1, 0, 0, 1],
                                  'params': [2.]},
                                 {'n': 2, 'mode': 'exact',
                                  'entries': ['1', '0', '0', '1'],
                                  'params': ['1/x']},
                                 {'n': 2, 'mode': 'float',
                                  'entries': [1, 0, 0, 1], 'free': [1]},
                                 {'n': 2, 'mode': 'float',
                                  'entries': [1, 0, 0, 1],
                                  'params': [0.], 'free': [2]},
                                 {'n': 2, 'mode': 'float',
                                  'entries': [1, 0, 0, 1],
                                  'params': [0.], 'free': ['1']},
                                 {'n': 1, 'mode': 'float', 'entries': [1],
                                  'provenance': []}])
def test_invalid_json(raw: object) -> None:
    with pytest.raises(DocumentError):
        MatrixDocument.from_json(raw)


@pytest.mark.parametrize('text', ['',
                                  '{"n": 1',
                                  '1,0\n0\n',
                                  '1 0\n0\n',
                                  '# mode\n1\n',
                                  '# provenance: {\n1\n',
                                  '# free: 1\n1 0\n0 1\n',
                                  '# params: 0\n# free: x\n1 0\n0 1\n'])
def test_invalid_text(text: str) -> None:
    with pytest.raises(DocumentError):
        parse_documents(text)


def test_exact_csv() -> None:
    with pytest.raises(DocumentError):
        render_documents([MatrixDocument.from_matrix(build((0,),
                                                           Mode.EXACT))],
                         Format.CSV)


def test_report_to_json() -> None:
    result = report_to_json(verify_float([[1., 1.], [0., 1.]], 1e-12))

    assert json.loads(json.dumps(result)) == result
    assert result['mode'] == 'float'
    assert not result['passed']
    assert result['max_residual'] == 1.
    assert result['failures'][0] == {'kind': 'columns',
                                     'pair': [1, 2],
                                     'witness': 1.}


def test_recovery_to_json() -> None:
    result = recovery_to_json(recover([[1., 0.], [0., -1.]]))

    assert json.loads(json.dumps(result)) == result
    assert result == {'params': [0.],
                      'free': [],
                      'transform': {'row_signs': [1, -1],
                                    'col_signs': [1, 1],
                                    'row_perm': [0, 1],
                                    'col_perm': [0, 1]},
                      'exact': True,
                      'blocks': [[0, 1], [1, 2]]}
