import sys

from injcolor.cli import main

sys.exit(main())
