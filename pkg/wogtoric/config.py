# The MIT License (MIT)
#
# Copyright (c) 2026 The wogtoric Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

import logging

import yaml

from .oracle import Budget, DEFAULT_MAX_SPAIRS, DEFAULT_MAX_DEGREE


class ConfigError(ValueError):
    pass


_NAME_DEFAULT = {
    "oracle.max_spairs" : DEFAULT_MAX_SPAIRS,
    "oracle.max_degree" : DEFAULT_MAX_DEGREE,
    "workers"           : 1,
    "verbose"           : False,
}

_NAME_MINIMUM = {
    "oracle.max_spairs" : 1,
    "oracle.max_degree" : 1,
    "workers"           : 1,
}


def _flatten(data, prefix=""):
    if not isinstance(data, dict):
        raise ConfigError("Expected a mapping at '{}', got {}".format(prefix or "top level", type(data).__name__))

    for key, value in data.items():
        name = "{}{}".format(prefix, key)
        if isinstance(value, dict):
            yield from _flatten(value, name + ".")
        else:
            yield name, value


class Settings:

    def __init__(self, **values):
        self._values = dict(_NAME_DEFAULT)

        for name, value in values.items():
            self.set(name.replace("__", "."), value)

    @classmethod
    def load(cls, path):
        try:
            with open(path) as handle:
                data = yaml.load(handle, Loader=yaml.SafeLoader)
        except yaml.YAMLError as exc:
            raise ConfigError("Cannot parse '{}': {}".format(path, exc))

        settings = cls()

        for name, value in _flatten(data or {}):
            settings.set(name, value)

        logging.debug("Loaded settings from {}: {}".format(path, settings._values))
        return settings

    def get(self, name):
        if name not in _NAME_DEFAULT:
            raise ConfigError("Unknown setting '{}'".format(name))

        return self._values[name]

    def set(self, name, value):
        if name not in _NAME_DEFAULT:
            raise ConfigError("Unknown setting '{}'".format(name))

        expected = type(_NAME_DEFAULT[name])
        if type(value) is not expected:
            raise ConfigError("Setting '{}' must be {}, got {!r}".format(name, expected.__name__, value))

        if name in _NAME_MINIMUM and value < _NAME_MINIMUM[name]:
            raise ConfigError("Setting '{}' must be at least {}, got {}".format(name, _NAME_MINIMUM[name], value))

        self._values[name] = value

    @property
    def budget(self):
        return Budget(self.get("oracle.max_spairs"), self.get("oracle.max_degree"))

    @property
    def workers(self):
        return self.get("workers")

    @property
    def verbose(self):
        return self.get("verbose")
