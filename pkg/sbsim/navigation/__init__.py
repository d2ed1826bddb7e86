"""
Translational dynamics, propagation, Lambert transfers and TCM planning.
"""

from .state import NAV_LAYOUT, NavState, PropulsionCommand
from .dynamics import disturbance_force, nav_acceleration, nav_derivative
from .propagation import (kepler_propagate, propagate, select_center,
                          sphere_of_influence, step_nav, switch_center)
from .jacobian import (StateTransition, covariance_time_update,
                       state_transition_jacobian)
from .lambert import PROGRADE, RETROGRADE, lambert_solve
from .tcm import TcmPlan, aim_point, plan_tcm, predict_miss
from .state_errors import inject_state_error

__all__ = ['NAV_LAYOUT', 'NavState', 'PropulsionCommand',
           'disturbance_force', 'nav_acceleration', 'nav_derivative',
           'kepler_propagate', 'propagate', 'select_center',
           'sphere_of_influence', 'step_nav', 'switch_center',
           'StateTransition', 'covariance_time_update',
           'state_transition_jacobian', 'PROGRADE', 'RETROGRADE',
           'lambert_solve', 'TcmPlan', 'aim_point', 'plan_tcm',
           'predict_miss', 'inject_state_error']
