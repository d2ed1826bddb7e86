"""Orbit propagation, center-of-integration switching and Kepler flight."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import math
import numpy
from scipy.optimize import newton

# local imports
from sbsim.core.integrator import rk4_step
from sbsim.core.quaternion import IDENTITY
from sbsim.environment.bodies import KeplerEphemeris
from sbsim.errors import GeometryError, SimulationError, StepSizeError
from sbsim.navigation.dynamics import nav_derivative
from sbsim.navigation.state import NavState

logger = logging.getLogger(__name__)

SOI_HYSTERESIS = 0.05
ENERGY_TOLERANCE = 1e-3


def _resolve(body, env):
    if isinstance(body, str):
        if env is None or body not in env.bodies:
            raise KeyError('Unknown body {!r}.'.format(body))
        return env[body]
    return body


def switch_center(x, from_body, to_body, t=0.0, env=None):
    """
    Re-express a NavState relative to another center body.

    Bodies are CelestialBody objects, or ids looked up in `env`. The
    inertial position and velocity are preserved.
    """
    from_body = _resolve(from_body, env)
    to_body = _resolve(to_body, env)
    if x.center != from_body.body_id:
        raise ValueError('State is centered on {}, not {}.'
                         .format(x.center, from_body.body_id))
    return NavState(
        x.position + (from_body.position(t) - to_body.position(t)),
        x.velocity + (from_body.velocity(t) - to_body.velocity(t)),
        to_body.body_id)


def sphere_of_influence(body, sun, t=0.0):
    """
    Sphere-of-influence radius a (mu_body / mu_sun)^(2/5), m.

    `a` is the semi-major axis of Keplerian bodies, the current Sun
    distance otherwise. The Sun's own sphere is unbounded.
    """
    if body.body_id == sun.body_id:
        return numpy.inf
    ephemeris = body.ephemeris
    if isinstance(ephemeris, KeplerEphemeris):
        distance = ephemeris.semi_major_axis
    else:
        distance = numpy.linalg.norm(body.position(t) - sun.position(t))
    return distance * (body.mu / sun.mu) ** 0.4


def select_center(x, env, t=0.0, hysteresis=SOI_HYSTERESIS):
    """
    Center of integration for the current position.

    A body is entered inside its sphere of influence and left beyond
    (1 + hysteresis) times it; the Sun is the fallback.
    """
    r_abs = x.position + env[x.center].position(t)
    sun = env.sun
    current = env[x.center]
    if current.body_id != sun.body_id:
        radius = sphere_of_influence(current, sun, t)
        if numpy.linalg.norm(r_abs - current.position(t)) <= (
                1.0 + hysteresis) * radius:
            return current.body_id
    for body in env.gravitating_bodies():
        if body.body_id == sun.body_id:
            continue
        distance = numpy.linalg.norm(r_abs - body.position(t))
        if distance < sphere_of_influence(body, sun, t):
            return body.body_id
    return sun.body_id


def _thrust_at(profile, t, dt):
    if profile is None:
        return numpy.zeros(3)
    if hasattr(profile, 'mean_thrust'):
        return profile.mean_thrust(t, dt)
    return numpy.asarray(profile(t), dtype=float)


def step_nav(x, thrust, env, vehicle, t, dt, quaternion=IDENTITY):
    """One RK4 step with the thrust held constant over the step."""
    thrust = numpy.asarray(thrust, dtype=float)

    def derivative(tau, y):
        return nav_derivative(NavState.from_values(y, x.center), thrust, env,
                              vehicle, tau, quaternion)

    y = rk4_step(derivative, x.as_state_vector(), t, dt)
    return NavState.from_values(y.values, x.center)


def _two_body_energy(x, env):
    mu = env[x.center].mu
    return (0.5 * x.velocity.dot(x.velocity)
            - mu / numpy.linalg.norm(x.position))


def _is_two_body(x, env, profile):
    bodies = env.gravitating_bodies()
    return (profile is None and env.srp_model == 'none' and len(bodies) == 1
            and bodies[0].body_id == x.center
            and not numpy.any(bodies[0].position(0.0)))


def propagate(x, profile, dt, horizon, env, vehicle, t0=0.0,
              quaternion=IDENTITY, switch=True):
    """
    Fixed-step RK4 trace of the navigation state.

    Parameters
    ----------
    x : NavState
        Initial state at `t0`.
    profile : PropulsionCommand, callable or None
        Thrust as a function of time. A callable is evaluated at each step
        start; a burn is averaged over the part of the step it covers.
    dt, horizon : float
        Step and total duration, s.
    env : sbsim.environment.Environment
    vehicle : object
        See `sbsim.navigation.dynamics.nav_acceleration`.
    switch : bool
        Whether sphere-of-influence crossings switch the center.

    Returns
    -------
    list of (t, NavState)
        Including the initial state.

    Raises
    ------
    StepSizeError
        When an unforced two-body propagation drifts in specific energy by
        more than 1e-3 relative.

    """
    if not dt > 0:
        raise StepSizeError('Propagation step must be positive.')
    steps = int(round(horizon / dt))
    check_energy = _is_two_body(x, env, profile)
    energy0 = _two_body_energy(x, env) if check_energy else None
    trace = [(t0, x)]
    t = t0
    for k in range(steps):
        x = step_nav(x, _thrust_at(profile, t, dt), env, vehicle, t, dt,
                     quaternion)
        t = t0 + (k + 1) * dt
        if switch:
            center = select_center(x, env, t)
            if center != x.center:
                logger.info('Center of integration %s -> %s at t=%s s.',
                            x.center, center, t)
                x = switch_center(x, x.center, center, t, env)
        if check_energy:
            drift = abs(_two_body_energy(x, env) - energy0) / abs(energy0)
            if drift > ENERGY_TOLERANCE:
                raise StepSizeError(
                    'Specific energy drifted by {:.2e} after {} steps; '
                    'use a smaller time step.'.format(drift, k + 1))
        trace.append((t, x))
    return trace


def _stumpff(z):
    """Stumpff functions C(z) and S(z)."""
    if abs(z) < 1e-3:
        c = 0.5 - z / 24.0 + z * z / 720.0 - z ** 3 / 40320.0
        s = 1.0 / 6.0 - z / 120.0 + z * z / 5040.0 - z ** 3 / 362880.0
    elif z > 0:
        root = math.sqrt(z)
        c = (1.0 - math.cos(root)) / z
        s = (root - math.sin(root)) / root ** 3
    else:
        root = math.sqrt(-z)
        c = (math.cosh(root) - 1.0) / -z
        s = (math.sinh(root) - root) / root ** 3
    return c, s


def kepler_propagate(r, v, dt, mu):
    """
    Two-body flight of (r, v) over `dt` with universal variables.

    Returns
    -------
    (numpy.ndarray, numpy.ndarray)
        Position and velocity after `dt`.

    """
    r = numpy.asarray(r, dtype=float)
    v = numpy.asarray(v, dtype=float)
    r0 = numpy.linalg.norm(r)
    if r0 == 0:
        raise GeometryError('Kepler propagation from the central body.')
    if dt == 0:
        return r.copy(), v.copy()
    root_mu = math.sqrt(mu)
    radial = r.dot(v) / r0
    alpha = 2.0 / r0 - v.dot(v) / mu

    def residual(chi):
        z = alpha * chi * chi
        c, s = _stumpff(z)
        return (r0 * radial / root_mu * chi * chi * c
                + (1.0 - alpha * r0) * chi ** 3 * s + r0 * chi
                - root_mu * dt)

    def slope(chi):
        z = alpha * chi * chi
        c, s = _stumpff(z)
        return (r0 * radial / root_mu * chi * (1.0 - z * s)
                + (1.0 - alpha * r0) * chi * chi * c + r0)

    if alpha > 0:
        guess = root_mu * alpha * dt
    else:
        guess = root_mu * dt / r0
    try:
        chi = newton(residual, guess, fprime=slope, tol=1e-300, rtol=1e-13,
                     maxiter=200)
    except RuntimeError as error:
        raise SimulationError('Kepler propagation did not converge: {}'
                              .format(error))
    c, s = _stumpff(alpha * chi * chi)
    f = 1.0 - chi * chi / r0 * c
    g = dt - chi ** 3 * s / root_mu
    r_new = f * r + g * v
    r1 = numpy.linalg.norm(r_new)
    f_dot = root_mu / (r1 * r0) * (alpha * chi ** 3 * s - chi)
    g_dot = 1.0 - chi * chi / r1 * c
    return r_new, f_dot * r + g_dot * v
