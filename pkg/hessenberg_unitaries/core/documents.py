"""
Interchange documents for matrices and analysis results.

Structured documents are JSON objects (one per line in streams),
CSV blocks carry floating entries only,
text blocks are aligned grids with optional ``# key: value`` headers.
"""
import csv
import io
import json
from fractions import Fraction
from numbers import Real
from typing import (Any,
                    Dict,
                    Iterable,
                    List,
                    Mapping,
                    Optional,
                    Sequence,
                    Union)

from reprit.base import generate_repr

from .constants import (Format,
                        Mode)
from .errors import (DocumentError,
                     ParameterError)
from .matrices import HessenbergUnitary
from .parameters import ParamVector
from .radical import Radical
from .recovery import RecoveryResult
from .reports import VerifyReport
from .utils import to_rows

Entry = Union[Radical, float]
Provenance = Mapping[str, Any]

_FIELDS = 'n', 'mode', 'entries', 'params', 'free', 'provenance'


class MatrixDocument:
    __slots__ = '_entries', '_mode', '_params', '_provenance', '_size'

    @classmethod
    def from_json(cls, raw: Any) -> 'MatrixDocument':
        if not isinstance(raw, dict):
            raise DocumentError('Document should be an object, '
                                'but found {raw!r}.'
                                .format(raw=raw))
        unknown = set(raw) - set(_FIELDS)
        if unknown:
            raise DocumentError('Document fields should be among {fields}, '
                                'but found {unknown}.'
                                .format(fields=_FIELDS,
                                        unknown=sorted(unknown)))
        try:
            size, mode, entries = raw['n'], raw['mode'], raw['entries']
        except KeyError as error:
            raise DocumentError('Document should have `{field}` field.'
                                .format(field=error.args[0])) from None
        mode = _to_mode(mode)
        if not isinstance(entries, list):
            raise DocumentError('Entries should be a list, '
                                'but found {entries!r}.'
                                .format(entries=entries))
        entries = [(_to_radical(entry)
                    if mode is Mode.EXACT
                    else _to_float(entry))
                   for entry in entries]
        params, free = raw.get('params'), raw.get('free', [])
        if params is None and free:
            raise DocumentError('Free parameters indices should come '
                                'with parameters, but found {free!r}.'
                                .format(free=free))
        provenance = raw.get('provenance')
        if provenance is not None and not isinstance(provenance, dict):
            raise DocumentError('Provenance should be an object, '
                                'but found {provenance!r}.'
                                .format(provenance=provenance))
        return cls(size, mode, entries,
                   params=(None
                           if params is None
                           else _to_parameters(params, mode, free)),
                   provenance=provenance)

    @classmethod
    def from_matrix(cls,
                    matrix: HessenbergUnitary,
                    *,
                    provenance: Optional[Provenance] = None
                    ) -> 'MatrixDocument':
        entries = ([entry for row in matrix.entries for entry in row]
                   if matrix.mode is Mode.EXACT
                   else matrix.entries.ravel().tolist())
        return cls(matrix.size, matrix.mode, entries,
                   params=matrix.parameters,
                   provenance=provenance)

    def __init__(self,
                 size: int,
                 mode: Mode,
                 entries: Sequence[Entry],
                 *,
                 params: Optional[ParamVector] = None,
                 provenance: Optional[Provenance] = None) -> None:
        if not (isinstance(size, int) and not isinstance(size, bool)
                and size > 0):
            raise DocumentError('`n` should be a positive integer, '
                                'but found {size!r}.'
                                .format(size=size))
        entries = tuple(entries)
        if len(entries) != size * size:
            raise DocumentError('Entries count should be {expected}, '
                                'but found {count}.'
                                .format(expected=size * size,
                                        count=len(entries)))
        if params is not None and params.size != size:
            raise DocumentError('Parameters count should be {expected}, '
                                'but found {count}.'
                                .format(expected=size - 1,
                                        count=len(params)))
        self._entries, self._mode, self._params, self._provenance = (
            entries, Mode(mode), params,
            None if provenance is None else dict(provenance)
        )
        self._size = size

    __repr__ = generate_repr(__init__)

    @property
    def entries(self) -> Sequence[Entry]:
        return self._entries

    @property
    def mode(self) -> Mode:
        return self._mode

    @property
    def params(self) -> Optional[ParamVector]:
        return self._params

    @property
    def provenance(self) -> Optional[Dict[str, Any]]:
        return (None
                if self._provenance is None
                else dict(self._provenance))

    @property
    def size(self) -> int:
        return self._size

    def __eq__(self, other: 'MatrixDocument') -> bool:
        return ((self._size, self._mode, self._entries, self._params,
                 self._provenance)
                == (other._size, other._mode, other._entries, other._params,
                    other._provenance)
                if isinstance(other, MatrixDocument)
                else NotImplemented)

    __hash__ = None

    def to_json(self) -> Dict[str, Any]:
        result = {'n': self._size,
                  'mode': self._mode.value,
                  'entries': [_entry_to_json(entry)
                              for entry in self._entries]}
        if self._params is not None:
            result['params'] = parameters_to_json(self._params)
            if self._params.free:
                result['free'] = sorted(self._params.free)
        if self._provenance is not None:
            result['provenance'] = dict(self._provenance)
        return result

    def to_matrix(self) -> HessenbergUnitary:
        return HessenbergUnitary(to_rows(self._entries, self._size),
                                 self._mode, self._params)


def detect_format(text: str) -> Format:
    stripped = text.lstrip()
    if stripped.startswith('{'):
        return Format.JSON
    elif not stripped.startswith('#') and ',' in stripped:
        return Format.CSV
    return Format.TEXT


def parameters_to_json(parameters: ParamVector) -> List[Union[str, float]]:
    return [str(value) if parameters.is_exact else value
            for value in parameters.values]


def parse_documents(text: str,
                    format_: Optional[Format] = None) -> List[MatrixDocument]:
    format_ = detect_format(text) if format_ is None else Format(format_)
    if format_ is Format.JSON:
        return [MatrixDocument.from_json(raw) for raw in _load_jsons(text)]
    blocks = _to_blocks(text)
    if not blocks:
        raise DocumentError('Input should contain at least one matrix.')
    return [(_parse_csv_block if format_ is Format.CSV
             else _parse_text_block)(block)
            for block in blocks]


def recovery_to_json(result: RecoveryResult) -> Dict[str, Any]:
    transform = result.transform
    return {'params': parameters_to_json(result.parameters),
            'free': sorted(result.parameters.free),
            'transform': {'row_signs': list(transform.row_signs),
                          'col_signs': list(transform.col_signs),
                          'row_perm': list(transform.row_perm),
                          'col_perm': list(transform.col_perm)},
            'exact': result.exact,
            'blocks': [list(block) for block in result.blocks]}


def render_documents(documents: Iterable[MatrixDocument],
                     format_: Format) -> str:
    format_ = Format(format_)
    if format_ is Format.JSON:
        return ''.join(json.dumps(document.to_json()) + '\n'
                       for document in documents)
    render = _render_csv_block if format_ is Format.CSV else _render_text_block
    return '\n'.join(render(document) for document in documents)


def report_to_json(report: VerifyReport) -> Dict[str, Any]:
    return {'mode': report.mode.value,
            'passed': report.passed,
            'max_residual': report.max_residual,
            'failures': [{'kind': failure.kind,
                          'pair': list(failure.pair),
                          'witness': failure.witness}
                         for failure in report.failures]}


def _entry_to_json(entry: Entry) -> Union[str, float]:
    return str(entry) if isinstance(entry, Radical) else entry


def _load_jsons(text: str) -> List[Any]:
    decoder = json.JSONDecoder()
    result = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position == len(text):
            break
        try:
            raw, position = decoder.raw_decode(text, position)
        except json.JSONDecodeError as error:
            raise DocumentError('Input should be a sequence '
                                'of JSON documents, but {error}.'
                                .format(error=error)) from None
        result.append(raw)
    if not result:
        raise DocumentError('Input should contain at least one document.')
    return result


def _parse_csv_block(lines: Sequence[str]) -> MatrixDocument:
    rows = [row for row in csv.reader(lines) if row]
    if any(len(row) != len(rows) for row in rows):
        raise DocumentError('CSV rows should form a square, '
                            'but found lengths {lengths}.'
                            .format(lengths=[len(row) for row in rows]))
    return MatrixDocument(len(rows), Mode.FLOAT,
                          [_to_float(cell.strip())
                           for row in rows
                           for cell in row])


def _parse_text_block(lines: Sequence[str]) -> MatrixDocument:
    headers = {}  # type: Dict[str, str]
    rows = []  # type: List[List[str]]
    for line in lines:
        if line.startswith('#'):
            key, separator, value = line[1:].partition(':')
            if not separator:
                raise DocumentError('Header should have "# key: value" form, '
                                    'but found {line!r}.'
                                    .format(line=line))
            headers[key.strip()] = value.strip()
        else:
            rows.append(line.split())
    if any(len(row) != len(rows) for row in rows):
        raise DocumentError('Text rows should form a square, '
                            'but found lengths {lengths}.'
                            .format(lengths=[len(row) for row in rows]))
    tokens = [token for row in rows for token in row]
    if 'mode' in headers:
        mode = _to_mode(headers['mode'])
    else:
        try:
            for token in tokens:
                Radical.from_string(token)
        except DocumentError:
            mode = Mode.FLOAT
        else:
            mode = Mode.EXACT
    entries = [_to_radical(token) if mode is Mode.EXACT else _to_float(token)
               for token in tokens]
    if 'free' in headers and 'params' not in headers:
        raise DocumentError('Free parameters indices should come '
                            'with parameters header.')
    params = (_to_parameters(headers['params'].split(), mode,
                             _to_indices(headers.get('free', '').split()))
              if 'params' in headers
              else None)
    provenance = None
    if 'provenance' in headers:
        try:
            provenance = json.loads(headers['provenance'])
        except json.JSONDecodeError as error:
            raise DocumentError('Provenance should be a JSON object, '
                                'but {error}.'
                                .format(error=error)) from None
    return MatrixDocument(len(rows), mode, entries,
                          params=params,
                          provenance=provenance)


def _render_csv_block(document: MatrixDocument) -> str:
    if document.mode is Mode.EXACT:
        raise DocumentError('CSV carries floating entries only, '
                            'exact matrices should use json or text format.')
    stream = io.StringIO()
    writer = csv.writer(stream,
                        lineterminator='\n')
    writer.writerows([repr(entry) for entry in row]
                     for row in to_rows(document.entries, document.size))
    return stream.getvalue()


def _render_text_block(document: MatrixDocument) -> str:
    lines = ['# mode: {}'.format(document.mode.value)]
    if document.params is not None:
        lines.append('# params: {}'.format(' '.join(
                map(str, parameters_to_json(document.params)))))
        if document.params.free:
            lines.append('# free: {}'.format(
                    ' '.join(map(str, sorted(document.params.free)))))
    if document.provenance is not None:
        lines.append('# provenance: {}'.format(
                json.dumps(document.provenance, sort_keys=True)))
    cells = [[_entry_to_text(entry) for entry in row]
             for row in to_rows(document.entries, document.size)]
    widths = [max(map(len, column)) for column in zip(*cells)]
    lines.extend('  '.join(cell.rjust(width)
                           for cell, width in zip(row, widths))
                 for row in cells)
    return '\n'.join(lines) + '\n'


def _entry_to_text(entry: Entry) -> str:
    return str(entry) if isinstance(entry, Radical) else repr(entry)


def _to_blocks(text: str) -> List[List[str]]:
    result = [[]]  # type: List[List[str]]
    for line in text.splitlines():
        line = line.strip()
        if line:
            result[-1].append(line)
        elif result[-1]:
            result.append([])
    return [block for block in result if block]


def _to_float(raw: Any) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (Real, str)):
        raise DocumentError('Entry should be a number, but found {raw!r}.'
                            .format(raw=raw))
    try:
        return float(raw)
    except ValueError:
        raise DocumentError('Entry should be a number, but found {raw!r}.'
                            .format(raw=raw)) from None


def _to_indices(tokens: Sequence[str]) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise DocumentError('Free parameters indices should be integers, '
                            'but found {tokens}.'
                            .format(tokens=tokens)) from None


def _to_mode(raw: Any) -> Mode:
    try:
        return Mode(raw)
    except ValueError:
        raise DocumentError('Mode should be one of {modes}, '
                            'but found {raw!r}.'
                            .format(modes=[mode.value for mode in Mode],
                                    raw=raw)) from None


def _to_parameters(raw: Any,
                   mode: Mode,
                   free: Any = ()) -> ParamVector:
    if not isinstance(raw, list):
        raise DocumentError('Parameters should be a list, '
                            'but found {raw!r}.'
                            .format(raw=raw))
    if mode is Mode.EXACT:
        try:
            values = [Fraction(value) for value in raw]
        except (TypeError, ValueError, ZeroDivisionError):
            raise DocumentError('Exact parameters should be rationals '
                                'in "p/q" form, but found {raw!r}.'
                                .format(raw=raw)) from None
    else:
        values = [_to_float(value) for value in raw]
    if not (isinstance(free, (list, tuple))
            and all(isinstance(index, int) and not isinstance(index, bool)
                    for index in free)):
        raise DocumentError('Free parameters indices should be '
                            'a list of integers, but found {free!r}.'
                            .format(free=free))
    try:
        return ParamVector(values,
                           free=free)
    except ParameterError as error:
        raise DocumentError(str(error)) from None


def _to_radical(raw: Any) -> Radical:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise DocumentError('Exact entry should be a radical string, '
                            'but found {raw!r}.'
                            .format(raw=raw))
    return Radical.from_string(str(raw))
