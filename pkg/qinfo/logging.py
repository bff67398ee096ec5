from logging import DEBUG, getLogger

import numpy as np

logger = getLogger('qinfo')


def log_debug(*msgs):
    logger.debug(" ".join(str(m) for m in msgs))


def log_matrix(label, matrix):
    """Dumps a matrix to the debug log, one row per line."""
    if not logger.isEnabledFor(DEBUG):
        return

    rows = np.array2string(np.asarray(matrix), precision=6, suppress_small=True).splitlines()
    logger.debug("--- \033[32m{}\033[0m {}".format(label, np.shape(matrix)))
    for row in rows:
        logger.debug("    \033[33m{}\033[0m".format(row))


def log_report(label, report):
    logger.debug("=== \033[32m{}\033[0m I_Q={:.12g} Ĩ_Q={:.12g} K_Q={:.12g} {}".format(
        label, report.i_q, report.i_tilde, report.k_q, report.classification))
