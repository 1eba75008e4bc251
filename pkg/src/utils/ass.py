# little assistant not ass

import os

from utils.ansiColors import Colors, paint

R_ARROW = '\u2192'  # '→' U+2192
BALLOT_X = '\u2717'  # '✗' U+2717
CHECK_MARK = '\u2713'  # '✓' U+2713


def status_mark(ok):
    """Coloured check mark or ballot x"""
    return paint(CHECK_MARK, Colors.SUCCESS) if ok else paint(BALLOT_X, Colors.FAIL)


#############
# directory #
#############


def require_parent_directory(path_name):
    dir_name = os.path.dirname(path_name)

    if dir_name and not os.path.isdir(dir_name):
        raise FileNotFoundError(f"Error: Directory '{dir_name}' does not exist")
