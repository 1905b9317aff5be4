import sys

from mfkit.cli import main


sys.exit(main())
