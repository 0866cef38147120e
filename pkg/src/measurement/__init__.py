"""
观测合成模块
"""

from .schedule import RisSchedule, make_ris_schedule
from .observation import MeasurementSet, observe, to_cs_model, calibrate_noise

__all__ = ['RisSchedule', 'make_ris_schedule', 'MeasurementSet', 'observe', 'to_cs_model', 'calibrate_noise']
