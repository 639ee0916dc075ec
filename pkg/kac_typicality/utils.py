import json
import os
import shutil
import time
import argparse
import sys


def read_jsonfile(filepath):
    with open(filepath, 'r') as f:
        d = json.load(f)
        return d


# NOTE: keys are sorted by default so that reports are byte-reproducible.
def write_jsonfile(d, filepath, sort_keys=True):
    with open(filepath, 'w') as f:
        json.dump(d, f, indent=4, sort_keys=sort_keys)
        f.write("\n")


def read_textfile(filepath, strip=True):
    with open(filepath, 'r', encoding='utf-8') as f:
        lines = f.readlines()
        if strip:
            lines = [line.strip() for line in lines]
        return lines


def write_textfile(filepath, lines, append=False, with_newline=True):
    mode = 'a' if append else 'w'
    with open(filepath, mode, encoding='utf-8') as f:
        for line in lines:
            f.write(line)
            if with_newline:
                f.write("\n")


def path_prefix(path):
    return os.path.split(path)[0]


def join_paths(paths):
    return os.path.join(*paths)


def file_exists(path):
    return os.path.isfile(path)


def folder_exists(path):
    return os.path.isdir(path)


def create_folder(folderpath, abort_if_exists=True,
                  create_parent_folders=False):
    assert not file_exists(folderpath)
    assert create_parent_folders or folder_exists(path_prefix(folderpath))
    assert not (abort_if_exists and folder_exists(folderpath))

    if not folder_exists(folderpath):
        os.makedirs(folderpath)


def delete_folder(folderpath, abort_if_nonempty=True, abort_if_notexists=True):
    assert folder_exists(folderpath) or (not abort_if_notexists)

    if folder_exists(folderpath):
        assert len(os.listdir(folderpath)) == 0 or (not abort_if_nonempty)
        shutil.rmtree(folderpath)
    else:
        assert not abort_if_notexists


def convert_between_time_units(x, src_units='seconds', dst_units='hours'):
    d = {}
    d['seconds'] = 1.0
    d['minutes'] = 60.0 * d['seconds']
    d['hours'] = 60.0 * d['minutes']
    d['miliseconds'] = d['seconds'] * 1e-3
    return (x * d[src_units]) / d[dst_units]


class TimerManager:
    """Named timers used for the progress lines printed by the command line.

    Times never enter report files; they are only printed.
    """

    def __init__(self):
        self.init_time = time.time()
        self.name_to_timer = {}

    def create_timer(self, timer_name, abort_if_timer_exists=True):
        assert not abort_if_timer_exists or timer_name not in self.name_to_timer
        start_time = time.time()
        self.name_to_timer[timer_name] = {
            'start': start_time,
            'tick': start_time
        }

    def tick_timer(self, timer_name):
        self.name_to_timer[timer_name]['tick'] = time.time()

    def get_time_since_event(self, timer_name, event_name, units='seconds'):
        delta = time.time() - self.name_to_timer[timer_name][event_name]
        return convert_between_time_units(delta, dst_units=units)

    def get_time_since_last_tick(self, timer_name, units='seconds'):
        return self.get_time_since_event(timer_name, 'tick', units=units)


def environment_variable_name(env_prefix, argname):
    return env_prefix + argname.replace('-', '_').upper()


class CommandLineArgs:
    """Thin wrapper around ``argparse`` with environment-variable overrides.

    A flag ``--cap-lines`` declared on an instance with ``env_prefix='KAC_'``
    takes its default from ``KAC_CAP_LINES`` when that variable is set.
    Explicit flags always win over the environment.

    Args:
        argname_prefix (str, optional): Prefix added to every flag name.
        env_prefix (str, optional): Prefix of the environment variables that
            override flag defaults. ``None`` disables the overrides.
        parser (argparse.ArgumentParser, optional): Parser to populate, used
            for sub-commands.
    """

    def __init__(self, argname_prefix='', env_prefix=None, parser=None,
                 description=None, str_argnames=None):
        self.parser = parser if parser is not None else argparse.ArgumentParser(
            description=description)
        self.argname_prefix = argname_prefix
        self.env_prefix = env_prefix
        self.subparsers = None
        # shared with the sub-commands.
        self.str_argnames = str_argnames if str_argnames is not None else set()

    def add(self,
            argname,
            argtype,
            default_value=None,
            optional=False,
            help=None,
            valid_value_lst=None):
        valid_types = {'int': int, 'str': str, 'float': float, 'flag': None}
        assert argtype in valid_types

        name = self.argname_prefix + argname
        if argtype == 'str':
            self.str_argnames.add('--' + name)
        if self.env_prefix is not None:
            env_name = environment_variable_name(self.env_prefix, name)
            if env_name in os.environ:
                s = os.environ[env_name]
                if argtype == 'flag':
                    default_value = s.lower() in ('1', 'true', 'yes')
                else:
                    try:
                        default_value = valid_types[argtype](s)
                    except ValueError:
                        self.parser.error("invalid %s value %r in %s" %
                                          (argtype, s, env_name))
                optional = True

        if argtype == 'flag':
            self.parser.add_argument('--' + name,
                                     action='store_true',
                                     default=bool(default_value),
                                     help=help)
            return

        self.parser.add_argument('--' + name,
                                 required=not optional,
                                 default=default_value,
                                 type=valid_types[argtype],
                                 choices=valid_value_lst,
                                 help=help)

    def add_subcommand(self, name, help=None):
        """Creates a sub-command whose flags share this instance's prefixes.

        Returns:
            CommandLineArgs: Wrapper around the parser of the sub-command.
        """
        if self.subparsers is None:
            self.subparsers = self.parser.add_subparsers(dest='command')
            self.subparsers.required = True
        p = self.subparsers.add_parser(name, help=help)
        return CommandLineArgs(argname_prefix=self.argname_prefix,
                               env_prefix=self.env_prefix,
                               parser=p,
                               str_argnames=self.str_argnames)

    def parse(self, argv=None):
        """Parses ``argv`` (``sys.argv[1:]`` by default).

        Values of string flags may start with a dash, e.g.
        ``--lambda -1/2,0``; argparse would take them for a flag, so they are
        glued to their flag as ``--lambda=-1/2,0`` first.
        """
        argv = list(sys.argv[1:] if argv is None else argv)
        out = []
        t = 0
        while t < len(argv):
            if (argv[t] in self.str_argnames and t + 1 < len(argv) and
                    argv[t + 1].startswith('-') and
                    not argv[t + 1].startswith('--')):
                out.append(argv[t] + '=' + argv[t + 1])
                t += 2
            else:
                out.append(argv[t])
                t += 1
        return vars(self.parser.parse_args(out))


def get_config(config_filepath, config_name=None):
    """Reads a JSON file of named configurations (or a single configuration).

    Args:
        config_filepath (str): Path to the JSON file.
        config_name (str, optional): Name of the configuration to return. If
            ``None``, the whole file is returned.

    Returns:
        dict[str, object]: The selected configuration.
    """
    cfg = read_jsonfile(config_filepath)
    if config_name is None:
        return cfg
    assert config_name in cfg, "unknown configuration %s" % config_name
    return cfg[config_name]
