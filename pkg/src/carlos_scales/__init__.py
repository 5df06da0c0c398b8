"""Equal-step scales whose unit is the least-squares fit to chosen just intervals."""
from carlos_scales.analysis import (
    CARLOS2,
    CARLOS3,
    PENTATONIC,
    Family,
    OctaveFit,
    SearchHit,
    general_pair_family,
    octave_fit,
    search_carlos2,
    search_generic,
    tolerance_check,
)
from carlos_scales.builders import carlos2, carlos3, custom_system, general_pair, parse_system, pentatonic
from carlos_scales.errors import (
    BoundsRequiredError,
    BracketError,
    CarlosError,
    DegeneratePairError,
    DomainError,
    ParameterOrderError,
    SpecParseError,
)
from carlos_scales.intervals import JustInterval, Ratio, cents, compose, invert, parse_interval
from carlos_scales.lsq import DerivedScale, TargetSystem, numeric_minimize, objective, optimal_unit
from carlos_scales.report import ScaleReport, export_scl, make_report, parse_scl, render_table

__version__ = "0.1.0"
