import sys

from grovercount.cli import main

sys.exit(main())
