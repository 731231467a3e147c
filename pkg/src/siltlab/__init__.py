"""Silting objects, braid-group encodings and cluster categories for type-A quivers."""

from .braid import BraidElement, braid_geq, is_positive, normal_form, section_to_braid, section_to_silting
from .derived import AutoSpec, DerivedObject, a2_label, a2_object, apply_auto, chart_label, hom_d, object_at
from .modules import IntervalModule, ext_dim, hom_dim, knit_ar_quiver
from .orbit import OrbitCategory, OrbitFunctor, amiot_map_check, build_orbit, enumerate_ctilt, hom_orbit
from .quiver import QuiverA, Section, euler_form, reflect_section
from .silting import (
    HasseQuiver,
    SiltingCandidate,
    enumerate_interval,
    hasse,
    is_d_silting,
    is_presilting,
    is_silting,
    mutate,
    silting_geq,
    verify_mutation_bound,
    verify_ud_cluster_tilting,
)
from .verify import VerifyReport, run_suite

__all__ = [
    "AutoSpec", "BraidElement", "DerivedObject", "HasseQuiver", "IntervalModule", "OrbitCategory",
    "OrbitFunctor", "QuiverA", "Section", "SiltingCandidate", "VerifyReport", "a2_label", "a2_object",
    "amiot_map_check", "apply_auto", "braid_geq", "build_orbit", "chart_label", "enumerate_ctilt",
    "enumerate_interval", "euler_form", "ext_dim", "hasse", "hom_d", "hom_dim", "hom_orbit", "is_d_silting",
    "is_positive", "is_presilting", "is_silting", "knit_ar_quiver", "mutate", "normal_form", "object_at",
    "reflect_section", "run_suite", "section_to_braid", "section_to_silting", "silting_geq",
    "verify_mutation_bound", "verify_ud_cluster_tilting",
]
