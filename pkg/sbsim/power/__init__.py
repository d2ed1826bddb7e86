"""
Solar generation, power distribution and battery state of charge.
"""

from .solar import (IvcTable, SolarArray, incidence_angle, mppt_power,
                    mppt_operating_point, solar_power_hf, solar_power_lf,
                    solar_voltage_hf)
from .distribution import (LoadSchedule, PowerLoad, consumed_power,
                           net_energy, net_power)
from .battery import (Battery, branch_energy, bus_current,
                      soc_update_coulomb, soc_update_lf)

__all__ = ['IvcTable', 'SolarArray', 'incidence_angle', 'mppt_power',
           'mppt_operating_point', 'solar_power_hf', 'solar_power_lf',
           'solar_voltage_hf', 'LoadSchedule', 'PowerLoad',
           'consumed_power', 'net_energy', 'net_power', 'Battery',
           'branch_energy', 'bus_current', 'soc_update_coulomb',
           'soc_update_lf']
