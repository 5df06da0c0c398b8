import sys

from carlos_scales.cli import main

sys.exit(main())
