import sys

from mixgraph.cli import main

sys.exit(main())
