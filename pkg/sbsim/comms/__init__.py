"""
Link budget, ARQ throughput and onboard data buffer.
"""

from .link_budget import (BOLTZMANN_DB, LinkBudget, carrier_to_noise, eirp,
                          free_space_loss, from_db, pointing_loss,
                          supportable_data_rate, to_db)
from .arq import ArqConfig, FerCurve, arq_effective_rate, go_back_n_rate
from .buffer import DataBuffer, downlink_session

__all__ = ['BOLTZMANN_DB', 'LinkBudget', 'carrier_to_noise', 'eirp',
           'free_space_loss', 'from_db', 'pointing_loss',
           'supportable_data_rate', 'to_db', 'ArqConfig', 'FerCurve',
           'arq_effective_rate', 'go_back_n_rate', 'DataBuffer',
           'downlink_session']
