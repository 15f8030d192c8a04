#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2026 logmonoid developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Options from YAML files and the environment.
"""

import logging
import os

import yaml

LOG = logging.getLogger(__name__)

BOUND_ENV = "LOGMONOID_BOUND"

DEFAULT_OPTIONS = {
    'search_bound': 64,
    'strict_contact': False,
    'output': 'text',
}


def load_config_from_file(filepath):
    """Load the yaml config from file, given the file-path"""
    with open(filepath, 'r') as fp_:
        config = yaml.safe_load(fp_)

    return config or {}


def get_config_yaml(configfile):
    """Get the top level scalar options from a yaml file."""
    config = load_config_from_file(configfile)

    options = {}
    for item in config:
        if not isinstance(config[item], dict):
            options[item] = config[item]

    return options


def get_config(configfile):
    filetype = os.path.splitext(configfile)[1]
    if filetype in ('.yaml', '.yml'):
        return get_config_yaml(configfile)

    LOG.error("%s is not a valid extension for the config file, please use .yaml", filetype)
    return {}


def get_options(configfile=None, environ=None):
    """Defaults, then the config file, then the environment."""
    environ = os.environ if environ is None else environ
    options = dict(DEFAULT_OPTIONS)
    if configfile:
        options.update(get_config(configfile))

    bound = environ.get(BOUND_ENV)
    if bound:
        try:
            value = int(bound)
        except ValueError:
            LOG.warning("Ignoring %s=%r, not an integer", BOUND_ENV, bound)
        else:
            options['search_bound'] = value

    return options
