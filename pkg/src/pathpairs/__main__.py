import sys

from pathpairs.cli import main

sys.exit(main())
