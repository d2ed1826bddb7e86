__author__ = 'Mission Autonomy Simulation Group'
