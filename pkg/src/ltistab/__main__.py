import sys

from ltistab.cli import main

sys.exit(main())
