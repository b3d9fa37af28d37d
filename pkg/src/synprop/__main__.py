import sys

from synprop.cli import main

sys.exit(main())
