# pylint: disable=unused-import
from commandr import Run
import sys

import data
import experiment
import verification


if __name__ == '__main__':
    # Reports go to stdout, so the command line is echoed to stderr
    print('Command line: %s' % ' '.join(sys.argv), file=sys.stderr)
    Run()
