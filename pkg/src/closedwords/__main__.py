import sys

from closedwords.cli import main

sys.exit(main())
