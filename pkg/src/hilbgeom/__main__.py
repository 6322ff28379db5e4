import sys

from hilbgeom.cli import main

sys.exit(main())
