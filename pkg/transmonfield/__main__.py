# coding: utf-8
# Standard Python libraries
import sys

# Local imports
from .cli import main

if __name__ == '__main__':
    sys.exit(main())
