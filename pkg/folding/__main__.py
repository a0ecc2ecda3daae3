import sys

from folding.main import main

sys.exit(main())
