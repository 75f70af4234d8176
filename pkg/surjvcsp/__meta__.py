#
# surjvcsp/__meta__.py
#
"""Project Metadata"""

package = 'surjvcsp'
project = 'Boolean surjective valued constraint satisfaction toolkit'

version_info = (0, 3, 0, 'dev0')
version = '.'.join(map(str, version_info))
version_name = ''.join((project, 'version', version))

date = "Oct 18, 2026"
author = "The surjvcsp developers"
copyright = "Copyright 2026, The surjvcsp developers"

license = 'Apache v2.0'
