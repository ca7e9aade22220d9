import sys

from nail.harness.cli import main

sys.exit(main())
