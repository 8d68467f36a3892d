"""Finite categories, set-valued profunctors, coends and the Fock construction."""

from .fincat import (CategoryError, FinCat, Functor, ValidationReport, cyclic, discrete, monoid,
                     opposite, poset, terminal, validate, walking_arrow)
from .setprof import (NatTrans, Profunctor, covector, hom_profunctor, nat_iso_search,
                      validate_witness, vector)
from .coendeng import Composite, TruncationOverflow, coend, density_iso, prof_compose
from .fock import (FockCategory, SizeOverflow, annihilation, bang, coherent_extension, creation,
                   exp_free, fock_map, fock_truncated)
from .laws import SUITES, Check, SuiteReport, Subject, run_suites

__version__ = "0.1.0"
