import logging
import os
from datetime import datetime

# globals
file_logger = None  # mirrors every log() call to a file once logger_start() ran

start_time = None


# NOTE: this log will not add a newline after message
def log(msg, quiet=False):
    if not quiet:
        print(msg, end='', flush=True)
    if file_logger:
        file_logger.info(msg)


def logger_start(
    log_name='verify', log_ext='.txt', log_dir='.', add_start_time_to_name=True
):
    """Open <log_dir>/<log_name>_<YYYYmmdd_HHMM><log_ext> and mirror log() to it

    Returns:
        str: Path of the log file
    """
    global file_logger, start_time

    start_time = datetime.now()

    os.makedirs(log_dir, exist_ok=True)

    if add_start_time_to_name:
        path_name = f'{log_dir}/{log_name}_{start_time.strftime("%Y%m%d_%H%M")}{log_ext}'  # fmt: skip
    else:
        path_name = f'{log_dir}/{log_name}{log_ext}'

    file_logger = setup_file_logger(path_name, end='')

    file_logger.info(f'=== {start_time.strftime("%Y/%m/%d %H:%M:%S")} Begin ===\n')

    return path_name


def logger_end():
    """Append the elapsed time, detach the file and return the elapsed time

    Returns:
        timedelta: Time since logger_start(), None if it was never called
    """
    global file_logger, start_time

    if not file_logger:
        return None

    time_elapsed = datetime.now() - start_time if start_time else None

    file_logger.info(f'({time_elapsed} elapsed)\n\n')

    handler = getattr(file_logger, '_last_added_fh', None)
    if handler:
        file_logger.removeHandler(handler)
        handler.close()
        file_logger._last_added_fh = None

    file_logger = None
    start_time = None

    return time_elapsed


# return Logger
def setup_file_logger(path_name='log.txt', end='\n'):
    # NOTE: multiple calls to getLogger() with the same name will return a reference
    #       to the same logger object
    logger = logging.getLogger(__name__)

    logger.setLevel(logging.INFO)
    logger.propagate = False

    fh = logging.FileHandler(path_name, encoding='utf-8')

    fh.setLevel(logging.INFO)

    # log() already carries its own newlines
    fh.terminator = end

    if getattr(logger, '_last_added_fh', None):
        # remove last added handler
        logger.removeHandler(logger._last_added_fh)
        logger._last_added_fh.close()

    logger.addHandler(fh)

    logger._last_added_fh = fh

    return logger
