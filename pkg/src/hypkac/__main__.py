import sys

from hypkac.cli import main

sys.exit(main())
