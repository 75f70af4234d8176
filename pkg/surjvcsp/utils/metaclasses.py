#
# surjvcsp/utils/metaclasses.py
#
"""
Metaclasses shared across the package
"""


class ItemizedMeta(type):
    """
    Gives a class square-bracket lookup and membership tests. Item access
    is forwarded to the classmethod _getitem_ and the ``in`` operator to
    _contains_, so a family of classes can be indexed through its root,
    e.g. ``SurjError[3]``.
    """

    def __getitem__(cls, key):
        return cls._getitem_(key)

    def __contains__(cls, key):
        return cls._contains_(key)
