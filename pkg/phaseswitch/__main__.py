import sys

from phaseswitch.cli.main import main

sys.exit(main())
