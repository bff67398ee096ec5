# -*- coding: utf-8 -*-

from collections import namedtuple

__version__ = '0.1.0'

EnsembleSpec = namedtuple('EnsembleSpec', ['a1', 'a2', 'phases'])
InterferometerScenario = namedtuple('InterferometerScenario', ['photon', 'alpha_sq', 'beta_sq', 'eraser'])

PROGRAM_NAME = 'qinfo - quantum information and surplus knowledge of density matrices'
PROGRAM_WEBSITE = 'https://github.com/qinfo-project/qinfo'
