#
# surjvcsp/__main__.py
#

from sys import exit

from surjvcsp.cli import main


if __name__ == '__main__':
    exit(main())
