import sys

from aho_delta.cli import main

sys.exit(main())
