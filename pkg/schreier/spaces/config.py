"""
Resource limits shared by the searching operations.

Defaults live on the class; an instance may override any of them
with a mapping, just as a property suite is::

    >>> Budget().support
    20
    >>> Budget({'support': 24}).support
    24

The environment variable ``SCHREIER_BUDGET`` overrides the defaults
of :func:`Budget.from_env`. A bare integer sets the enumeration
limit; otherwise it is a comma-separated list of ``key=value``
pairs::

    >>> Budget.from_env({'SCHREIER_BUDGET': '4096'}).enumeration
    4096
    >>> Budget.from_env({'SCHREIER_BUDGET': 'support=8, enumeration=64'}).support
    8
"""

import os

FIELDS = (
    'enumeration',
    'support',
    'brute_force_below',
    'oracle_support',
    'witness_search',
    'cross_check_limits',
)


class Budget:
    enumeration = 1 << 20
    "Largest number of candidate subsets (2**N) that enumerate may scan"

    support = 20
    """
    Largest support for which a norm is found by search. Vectors whose
    whole support is admissible never search and are exempt.
    """

    brute_force_below = 12
    "Supports smaller than this are searched by plain enumeration"

    oracle_support = 16
    "Largest support the reference oracle accepts"

    witness_search = 1 << 14
    "Largest maximal set a witness generator will look for"

    cross_check_limits = False
    """
    When set, limit-case membership also asserts agreement with every
    smaller approximant.
    """

    def __init__(self, config=None):
        if config is None:
            config = {}
        self.load_config(config)

    def load_config(self, config):
        unknown = set(config) - set(FIELDS)
        if unknown:
            raise ValueError(f"Unknown budget fields: {sorted(unknown)}")
        self.__dict__.update(config)

    def as_dict(self):
        return {name: getattr(self, name) for name in FIELDS}

    @classmethod
    def from_env(cls, environ=None):
        if environ is None:
            environ = os.environ
        return cls(cls.parse(environ.get('SCHREIER_BUDGET', '')))

    @staticmethod
    def parse(text):
        """
        Parse the ``SCHREIER_BUDGET`` syntax.

        >>> Budget.parse('')
        {}
        >>> Budget.parse('cross_check_limits=1')
        {'cross_check_limits': True}
        """
        text = text.strip()
        if not text:
            return {}
        if text.isdigit():
            return {'enumeration': int(text)}
        pairs = (item.split('=', 1) for item in text.split(','))
        config = {key.strip(): int(value) for key, value in pairs}
        if 'cross_check_limits' in config:
            config['cross_check_limits'] = bool(config['cross_check_limits'])
        return config


budget = Budget.from_env()
"Process-wide default, used whenever an operation receives ``budget=None``"


def resolve(override):
    return budget if override is None else override
