"""Post-storm repair prioritisation for radial distribution feeders.

Pole fragility by lifetime class gives damaged-pole counts, damage gives
line repair times, and repair times weighted by lost-load value and pushed
up the feeder tree rank lines and feeders for restoration.
"""
from .damage import (ClassDamage, LineDamage, RepairParams, class_damage, damaged_in_class,
                     estimate_line_damage, ingest_observed_damage, repair_time)
from .fragility import (ClassTable, LifetimeClass, failure_probability, fragility_curve, slope,
                        validate_class_table)
from .network import Bus, Line, Network, build_network, downstream_lines, lines_of_feeder
from .scenario import (Dataset, ScenarioConfig, export_heatmap, export_ranking, load_bundled,
                       load_dataset, run_assessment, wind_sweep)
from .valuation import (Assessment, FeederValuation, LineValuation, dynamic_load_value, feeder_value,
                        line_dynamic_value, line_dynamic_values, rank_assessment, static_load_value,
                        value_network)

__version__ = "0.1.0"
