#
# surjvcsp/cli/formats.py
#
"""
Serializers for instances and result records.
"""

import json

from surjvcsp.core import format_value

RESULT_FIELDS = ('status', 'value', 'assignment', 'path', 'candidates_examined')


def format_instance(instance):
    """
    The ``boolean-vcsp`` text of an instance. Relations are written in
    order of first use, under the names given by ``instance.language()``.
    """
    language = instance.language()
    names = {relation: name for name, relation in language.items()}
    lines = ['boolean-vcsp', 'vars %d' % instance.num_vars]
    for name, relation in language.items():
        values = ' '.join(format_value(v) for v in relation.table)
        lines.append('rel %s %d %s' % (name, relation.arity, values))
    for c in instance.constraints:
        scope = ' '.join(map(str, c.scope))
        lines.append('con %s %s %s' % (format_value(c.weight), names[c.relation], scope))
    return '\n'.join(lines) + '\n'


def write_result(record):
    """
    Compact JSON for a record. Solve results are written with their fields
    in the fixed order status, value, assignment, path,
    candidates_examined; other records keep their own order.
    """
    if set(record) == set(RESULT_FIELDS):
        record = {key: record[key] for key in RESULT_FIELDS}
    return json.dumps(record, separators=(',', ':'))
