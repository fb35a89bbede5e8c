"""Stable Auslander-Reiten quivers of Dynkin tree class: quotient
construction, mesh-category Hom dimensions, Calabi-Yau dimensions, and
cluster-tilting verification."""

from .dynkin import A, D, DynkinType, E, Family, coxeter_data
from .zquiver import Automorphism, ZVertex, serre_auto, sigma_auto, tau_auto
from .quotient import (
    AdmissibleGroup,
    AlgebraLabel,
    StableQuiver,
    cluster_quiver_of,
    parse_label,
    stable_quiver_of,
)
from .homs import hammock, hom_dim_quotient, hom_dim_z, region_contains
from .cy import cy_brute, formula_candidates, mobius_cy, mod_inverse
from .tilting import keller_reiten_check, standard_slice
from .theorems import counterexample_d9, eligible_instances, verify_instance

__version__ = "0.1.0"

__all__ = [
    "A", "D", "E", "DynkinType", "Family", "coxeter_data",
    "Automorphism", "ZVertex", "tau_auto", "sigma_auto", "serre_auto",
    "AdmissibleGroup", "AlgebraLabel", "StableQuiver",
    "cluster_quiver_of", "parse_label", "stable_quiver_of",
    "hammock", "hom_dim_z", "hom_dim_quotient", "region_contains",
    "cy_brute", "formula_candidates", "mobius_cy", "mod_inverse",
    "keller_reiten_check", "standard_slice",
    "eligible_instances", "verify_instance", "counterexample_d9",
]
