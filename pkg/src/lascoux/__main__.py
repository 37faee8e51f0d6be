import sys

from lascoux.cli import main

sys.exit(main())
