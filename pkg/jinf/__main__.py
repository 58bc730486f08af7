"""Allow `python -m jinf`."""

import sys

from jinf.main import main

sys.exit(main())
