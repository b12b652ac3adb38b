"""Intersection graphs of subgroups of finite permutation groups."""
from .perm import (CycleParseError, DegreeMismatch, Permutation, compose, conjugate, element_props,
                   inverse, parse_cycles, render)
from .chain import (BudgetExceeded, GeneratedGroup, StabilizerChain, TrivialityReport, build_chain,
                    elements, intersect_trivial, is_member, join, load_group, subgroup_equal, subgroup_leq)
from .lattice import SubgroupSet, all_subgroups, catalog, prime_order_subgroups
from .graph import (DISCONNECTED, IntersectionGraph, build_graph, diam2_criterion, diameter, distance,
                    intersection_graph, prime_reduction_check)
from .certify import (Certificate, WitnessCase, build_cycle_normalizer, distance_class, is_theorem2_prime,
                      load_witness, order_product_forces_intersection, shipped_witness, verify_theorem2_pair)

__version__ = "0.1.0"
