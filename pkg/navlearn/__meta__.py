# Copyright Navlearn Developers 2026. All rights reserved.
#
# This program is free software: you can redistribute it and/or modify it under the
# terms of the Apache License (v2.0) as published by the Apache Software Foundation.
#
# This program is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
# PARTICULAR PURPOSE. See the Apache License for more details.
#
# You should have received a copy of the Apache License along with this program.
# If not, see <https://www.apache.org/licenses/LICENSE-2.0>.

"""Package metadata for navlearn."""


__appname__     = 'navlearn'
__version__     = '0.1.0'
__authors__     = ['Navlearn Developers']
__developer__   = 'Navlearn Developers'
__contact__     = ''
__license__     = 'Apache License 2.0'
__website__     = ''
__copyright__   = 'Navlearn Developers 2026'
__description__ = 'Cycle-detection learning on navigational tasks: simulation and analysis.'
__keywords__    = 'reinforcement-learning simulation transition-systems fixpoint convergence'
__ascii_art__   = r"""
                      __
   ____  ____ __   __/ /__  ____ __________
  / __ \/ __ `/ | / / / _ \/ __ `/ ___/ __ \
 / / / / /_/ /| |/ / /  __/ /_/ / /  / / / /
/_/ /_/\__,_/ |___/_/\___/\__,_/_/  /_/ /_/
"""
