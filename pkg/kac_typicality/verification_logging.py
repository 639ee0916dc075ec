import kac_typicality.utils as ut


def get_run_folderpath(folderpath, run_name):
    return ut.join_paths([folderpath, run_name])


def get_run_data_folderpath(folderpath, run_name):
    return ut.join_paths([get_run_folderpath(folderpath, run_name), "run_data"])


def get_all_cases_folderpath(folderpath, run_name):
    return ut.join_paths([get_run_folderpath(folderpath, run_name), 'cases'])


def get_case_folderpath(folderpath, run_name, case_id):
    return ut.join_paths(
        [get_all_cases_folderpath(folderpath, run_name),
         'x%d' % case_id])


def create_run_folderpath(folderpath,
                          run_name,
                          abort_if_exists=False,
                          delete_if_exists=False,
                          create_parent_folders=False):
    assert not (abort_if_exists and delete_if_exists)

    run_folderpath = get_run_folderpath(folderpath, run_name)
    if delete_if_exists:
        ut.delete_folder(run_folderpath, False, False)
    assert not (abort_if_exists and ut.folder_exists(run_folderpath))

    if not ut.folder_exists(run_folderpath):
        ut.create_folder(run_folderpath,
                         create_parent_folders=create_parent_folders)
        ut.create_folder(get_run_data_folderpath(folderpath, run_name))
        ut.create_folder(get_all_cases_folderpath(folderpath, run_name))


class CaseLogger:
    """Logger for a single verified case, e.g., one weight of a scan.

    The log is split into ``config.json``, the inputs that reproduce the case,
    and ``results.json``, what the checks found. Neither holds timings, so
    repeated runs write identical files.

    Args:
        folderpath (str): Folder holding the run folders.
        run_name (str): Name of the run.
        case_id (int): Number of the case; numbering starts at zero.
    """

    def __init__(self, folderpath, run_name, case_id, abort_if_exists=False):
        self.case_folderpath = get_case_folderpath(folderpath, run_name,
                                                   case_id)
        assert (not abort_if_exists) or (not ut.folder_exists(
            self.case_folderpath))
        ut.create_folder(self.case_folderpath,
                         abort_if_exists=abort_if_exists,
                         create_parent_folders=True)
        self.config_filepath = ut.join_paths(
            [self.case_folderpath, 'config.json'])
        self.results_filepath = ut.join_paths(
            [self.case_folderpath, 'results.json'])

    def log_config(self, config):
        assert not ut.file_exists(self.config_filepath)
        ut.write_jsonfile(config, self.config_filepath)

    def log_results(self, results):
        assert not ut.file_exists(self.results_filepath)
        assert ut.file_exists(self.config_filepath)
        assert isinstance(results, dict)
        ut.write_jsonfile(results, self.results_filepath)

    def results_exist(self):
        return ut.file_exists(self.results_filepath)


class RunLogger:
    """Logger for a whole run of a command.

    Creates ``<folderpath>/<run_name>/`` with ``run_data/`` for the summary
    and ``cases/x<id>/`` for each case.
    """

    def __init__(self,
                 folderpath,
                 run_name,
                 abort_if_exists=True,
                 delete_if_exists=False):
        self.folderpath = folderpath
        self.run_name = run_name
        create_run_folderpath(folderpath,
                              run_name,
                              abort_if_exists=abort_if_exists,
                              delete_if_exists=delete_if_exists,
                              create_parent_folders=True)

    def get_case_logger(self, case_id, abort_if_exists=False):
        return CaseLogger(self.folderpath,
                          self.run_name,
                          case_id,
                          abort_if_exists=abort_if_exists)

    def log_case(self, case_id, config, results):
        logger = self.get_case_logger(case_id, abort_if_exists=True)
        logger.log_config(config)
        logger.log_results(results)

    def log_summary(self, summary):
        ut.write_jsonfile(
            summary,
            ut.join_paths([
                get_run_data_folderpath(self.folderpath, self.run_name),
                'summary.json'
            ]))


def read_case_folder(case_folderpath):
    """Reads ``config.json`` and ``results.json`` of one case.

    Returns:
        dict[str, dict[str, object]]: Logs keyed by file name without
        extension.
    """
    assert ut.folder_exists(case_folderpath)
    name_to_log = {}
    for name in ['config', 'results']:
        log_filepath = ut.join_paths([case_folderpath, name + '.json'])
        name_to_log[name] = ut.read_jsonfile(log_filepath)
    return name_to_log


def read_run_folder(run_folderpath):
    """Reads the logs of every case of a run, in increasing case id."""
    assert ut.folder_exists(run_folderpath)
    all_cases_folderpath = ut.join_paths([run_folderpath, 'cases'])
    case_id = 0
    log_lst = []
    while True:
        case_folderpath = ut.join_paths([all_cases_folderpath, 'x%d' % case_id])
        if ut.folder_exists(case_folderpath):
            log_lst.append(read_case_folder(case_folderpath))
            case_id += 1
        else:
            break
    return log_lst


def read_run_summary(run_folderpath):
    return ut.read_jsonfile(
        ut.join_paths([run_folderpath, 'run_data', 'summary.json']))
