"""Scenario file parsing, typed access and command-line overrides."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import collections
import configparser
import difflib
import logging

# local imports
from sbsim.config.default_data import NO_DEFAULT, SECTIONS, TEMPLATES
from sbsim.errors import InvalidScenario

logger = logging.getLogger(__name__)


def parse_bool(text):
    value = text.strip().lower()
    if value in ('1', 'true', 'yes', 'on'):
        return True
    if value in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError('{!r} is not a boolean'.format(text))


def parse_floats(text):
    text = text.strip()
    if not text:
        return []
    return [float(word) for word in text.split(',')]


def parse_vector(text):
    values = parse_floats(text)
    if len(values) != 3:
        raise ValueError('expected 3 comma-separated values, got {}'
                         .format(len(values)))
    return values


def parse_matrix(text):
    """Three values for a diagonal or nine for a row-major 3x3 matrix."""
    values = parse_floats(text)
    if len(values) == 3:
        return [[values[0], 0.0, 0.0], [0.0, values[1], 0.0],
                [0.0, 0.0, values[2]]]
    if len(values) == 9:
        return [values[0:3], values[3:6], values[6:9]]
    raise ValueError('expected 3 or 9 comma-separated values, got {}'
                     .format(len(values)))


def parse_windows(text):
    """Windows 't0-t1, t2-t3' as ordered (start, end) pairs."""
    windows = []
    for word in text.split(','):
        word = word.strip()
        if not word:
            continue
        start, end = [float(value) for value in word.split('-')]
        if end <= start:
            raise ValueError('window {} ends before it starts'.format(word))
        if windows and start < windows[-1][1]:
            raise ValueError('windows must be ordered and disjoint')
        windows.append((start, end))
    return windows


def parse_names(text):
    return [word.strip() for word in text.split(',') if word.strip()]


PARSERS = {
    'str': lambda text: text.strip(),
    'float': float,
    'int': int,
    'bool': parse_bool,
    'floats': parse_floats,
    'vector': parse_vector,
    'matrix': parse_matrix,
    'windows': parse_windows,
    'names': parse_names,
}


def section_schema(name):
    """Key schema of a section name, None when the name is unknown."""
    if name in SECTIONS:
        return SECTIONS[name]
    prefix, dot, identifier = name.partition('.')
    if dot and identifier and prefix in TEMPLATES:
        return TEMPLATES[prefix]
    return None


def _suggest(word, candidates):
    match = difflib.get_close_matches(word, list(candidates), n=1)
    return ' Did you mean {!r}?'.format(match[0]) if match else ''


class ScenarioConfig(object):
    """
    Raw scenario sections with typed, defaulted access.

    Attributes
    ----------
    sections : collections.OrderedDict
        Section name -> OrderedDict of raw key -> value strings.
    source : str
        Path of the scenario file, or '<string>'.

    """

    def __init__(self, sections=None, source='<string>'):
        self.sections = collections.OrderedDict(
            (name, collections.OrderedDict(values))
            for name, values in (sections or {}).items())
        self.source = source

    @classmethod
    def from_file(cls, path):
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        try:
            with open(path) as stream:
                parser.read_file(stream)
        except IOError:
            raise InvalidScenario('Could not find scenario file {}.'
                                  .format(path))
        except configparser.Error as error:
            raise InvalidScenario('Invalid scenario file {}.'.format(path),
                                  [str(error).replace('\n', ' ')])
        return cls.from_parser(parser, path)

    @classmethod
    def from_string(cls, text):
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        try:
            parser.read_string(text)
        except configparser.Error as error:
            raise InvalidScenario('Invalid scenario text.',
                                  [str(error).replace('\n', ' ')])
        return cls.from_parser(parser)

    @classmethod
    def from_parser(cls, parser, source='<string>'):
        return cls(collections.OrderedDict(
            (name, parser.items(name)) for name in parser.sections()),
            source)

    def copy(self):
        return ScenarioConfig(self.sections, self.source)

    def unknown_keys(self):
        """One problem per unknown section or key, with a suggestion."""
        problems = []
        known = list(SECTIONS) + [p + '.<id>' for p in TEMPLATES]
        for name, values in self.sections.items():
            schema = section_schema(name)
            if schema is None:
                problems.append('Unknown section [{}].{}'.format(
                    name, _suggest(name, known)))
                continue
            for key in values:
                if key not in schema:
                    problems.append('Unknown key {}.{}.{}'.format(
                        name, key, _suggest(key, schema)))
        return problems

    def has(self, section, key):
        return key in self.sections.get(section, {})

    def get(self, section, key):
        """
        Typed value of `section.key`, falling back to its default.

        Raises
        ------
        InvalidScenario
            When the value is missing without a default or cannot be
            converted.

        """
        schema = section_schema(section)
        if schema is None or key not in schema:
            raise InvalidScenario('Unknown key {}.{}.'.format(section, key))
        kind, default = schema[key]
        raw = self.sections.get(section, {}).get(key)
        if raw is None:
            if default is NO_DEFAULT:
                raise InvalidScenario('Missing parameter {}.{}.'
                                      .format(section, key))
            if not isinstance(default, str):
                return default
            raw = default
        try:
            return PARSERS[kind](raw)
        except ValueError as error:
            raise InvalidScenario('Invalid value for {}.{}: {}.'
                                  .format(section, key, error))

    def section(self, name):
        """Dict of every typed key of a section, defaults included."""
        return collections.OrderedDict(
            (key, self.get(name, key)) for key in section_schema(name))

    def components(self, prefix):
        """(id, typed section) pairs of the <prefix>.<id> sections."""
        result = []
        for name in self.sections:
            head, dot, identifier = name.partition('.')
            if head == prefix and dot and identifier:
                result.append((identifier, self.section(name)))
        return result

    def _all_keys(self):
        keys = collections.defaultdict(list)
        for name in self.sections:
            for key in section_schema(name) or ():
                keys[key].append(name)
        for name, schema in SECTIONS.items():
            for key in schema:
                if name not in keys[key]:
                    keys[key].append(name)
        return keys

    def set(self, dotted, value):
        """
        Apply one override.

        `dotted` is `section.key`, where the section name may itself
        contain dots, or a bare key when it is unique across sections.
        """
        section, dot, key = dotted.rpartition('.')
        if not dot:
            owners = self._all_keys().get(dotted, [])
            if len(owners) != 1:
                if owners:
                    raise InvalidScenario(
                        'Ambiguous key {}: qualify it with one of {}.'
                        .format(dotted, ', '.join(owners)))
                raise InvalidScenario('Unknown key {}.{}'.format(
                    dotted, _suggest(dotted, self._all_keys())))
            section, key = owners[0], dotted
        schema = section_schema(section)
        if schema is None:
            known = list(SECTIONS) + list(self.sections)
            raise InvalidScenario('Unknown section {}.{}'.format(
                section, _suggest(section, known)))
        if key not in schema:
            raise InvalidScenario('Unknown key {}.{}.{}'.format(
                section, key, _suggest(key, schema)))
        self.sections.setdefault(section, collections.OrderedDict())
        self.sections[section][key] = value
        logger.info('Override %s.%s = %s', section, key, value)

    def apply_overrides(self, overrides):
        """Apply 'key=value' strings in order."""
        for item in overrides or ():
            dotted, equals, value = item.partition('=')
            if not equals or not dotted.strip():
                raise InvalidScenario('Invalid override {!r}: expected '
                                      'key=value.'.format(item))
            self.set(dotted.strip(), value.strip())
        return self


def read_scenario(path, overrides=None):
    """Parse a scenario file and apply overrides."""
    return ScenarioConfig.from_file(path).apply_overrides(overrides)
