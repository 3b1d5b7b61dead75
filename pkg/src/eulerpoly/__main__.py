import sys

from eulerpoly.cli import main

sys.exit(main())
