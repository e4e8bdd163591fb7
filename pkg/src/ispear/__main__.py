import sys

from ispear.cli import main

sys.exit(main())
