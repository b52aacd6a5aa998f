import sys

from ifdist.cli import main

sys.exit(main())
