# __main__.py
# python -m qinvar

import sys

from .cli import main

sys.exit(main())
