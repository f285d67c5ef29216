import sys

from hyperfib.cli import main

sys.exit(main())
