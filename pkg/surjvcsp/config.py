#
# surjvcsp/config.py
#
"""
Tunable limits shared by the guards of the package.

Values come from, in increasing priority: the defaults below, the
``SURJVCSP_*`` environment variables, and keyword arguments. The module
level ``settings`` object is what library code consults; the command line
updates it from its flags.
"""

import os
import logging

logger = logging.getLogger(__name__)

DEFAULTS = {
    'brute_force_limit': ('SURJVCSP_BRUTE_LIMIT', 24),
    'gmc_brute_limit': ('SURJVCSP_GMC_BRUTE_LIMIT', 20),
    'cut_brute_limit': ('SURJVCSP_CUT_BRUTE_LIMIT', 20),
    'superadditivity_limit': ('SURJVCSP_SUPERADDITIVITY_LIMIT', 16),
    'sandwich_check_limit': ('SURJVCSP_SANDWICH_LIMIT', 12),
}


class Settings:
    """
    Dict-like store of configuration options.
    """

    def __init__(self, **kw):
        self.config = {
            'env': os.getenv('SURJVCSP_ENV', 'development'),
            'validate_superadditive': True,
        }
        for name, (variable, default) in DEFAULTS.items():
            self.config[name] = self._from_environment(variable, default)
        self.config.update(kw)

    @staticmethod
    def _from_environment(variable, default):
        raw = os.getenv(variable)
        if raw is None:
            return default
        try:
            return int(raw)
        except ValueError:
            logger.warning("Ignoring non-integer %s=%r", variable, raw)
            return default

    def enable(self, name):
        self.config[name] = True

    def disable(self, name):
        self.config[name] = False

    def enabled(self, name):
        """
        Returns the truth of a flag, or None when it was never set.
        """
        try:
            return bool(self.config[name])
        except KeyError:
            return None

    def __setitem__(self, key, value):
        self.config[key] = value

    def __getitem__(self, key):
        return self.config[key]

    def __contains__(self, key):
        return key in self.config


settings = Settings()
