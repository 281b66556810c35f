"""mu-way latin squares, trades, constructions, search and intersection spectra."""
from .core import (
    EMPTY,
    CellConflict,
    DimensionError,
    Grid,
    LatinError,
    MuWayRectangle,
    MuWaySquare,
    MuWayTrade,
    NonLatinLayer,
    Skeleton,
    TradeError,
    assemble_mu_way,
    extract_trade,
    intersection_size,
    skeleton_of,
    validate_partial_latin,
)
from .formats import FormatError, parse_compact, parse_mwls, render_compact, render_mwls
from .trades import Verdict, full_trade, gear_trade, trade_of_volume
from .search import SearchOutcome, SearchSpec, Status, brute_force_oracle, search
from .spectrum import Assembler, SpectrumSet, assemble, j_set, reconcile

__version__ = "0.1.0"
