import sys

from relbgg.cli import main

sys.exit(main())
