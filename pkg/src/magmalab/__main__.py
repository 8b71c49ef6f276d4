import sys

from magmalab.cli import main

sys.exit(main())
