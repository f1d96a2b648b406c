import csv
import io
import os

from sim.exceptions import SimulationError
from spectrum.weights import union_bound

CSV_COLUMNS = ('snr_db', 'frames', 'errors', 'bler', 'mean_anv',
               'mean_sort_ops')


def _number(value):
    return format(float(value), '.10g')


def _bound(spectrum, rate, snr_db):
    if rate is None:
        raise SimulationError('a union bound overlay needs the code rate')
    return union_bound(spectrum, rate, snr_db)


def emit_report(records, spectrum=None, rate=None):
    """CSV text; a union_bound column is added when a spectrum is given"""
    columns = CSV_COLUMNS + (('union_bound',) if spectrum else ())
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for record in records:
        row = [_number(record.snr_db), record.frames, record.frame_errors,
               _number(record.bler), _number(record.mean_anv),
               _number(record.mean_sort_ops)]
        if spectrum:
            row.append(_number(_bound(spectrum, rate, record.snr_db)))
        writer.writerow(row)
    return buffer.getvalue()


def write_plot_data(records, directory, spectrum=None, rate=None):
    """One `snr value` file per curve; returns the written paths"""
    os.makedirs(directory, exist_ok=True)
    curves = {
        'bler.dat': [r.bler for r in records],
        'anv.dat': [r.mean_anv for r in records],
        'sort_ops.dat': [r.mean_sort_ops for r in records],
    }
    if spectrum:
        curves['union_bound.dat'] = [_bound(spectrum, rate, r.snr_db)
                                     for r in records]
    paths = []
    for name, values in curves.items():
        path = os.path.join(directory, name)
        with open(path, 'w') as stream:
            for record, value in zip(records, values):
                stream.write(f'{_number(record.snr_db)} {_number(value)}\n')
        paths.append(path)
    return paths
