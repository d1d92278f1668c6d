import sys

from degseq.cli.app import main

sys.exit(main())
