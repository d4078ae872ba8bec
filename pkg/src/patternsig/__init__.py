"""Exact solver for signaling games where the receiver recognizes type patterns."""
from .model import (EmptyBlock, InvalidGame, OverlappingBlocks, PartitionError, PatternPartition,
                    SignalingGame, UncoveredType, ValidationReport, coarsest_partition,
                    discrete_partition, make_game, make_partition, validate_game)
from .receiver import (ActionRegion, Belief, Interval, PatternCountNot2, belief_intervals,
                       best_actions, receiver_objective, worst_case_payoff)
from .sender import (SelectionProfile, TypeBestResponse, enumerate_selections,
                     optimal_message_set, type_best_messages)
from .beliefs import (ConditionalMessageDist, PosteriorProfile, conditional_message_dist,
                      incentive_patterns, posterior, posterior_profile)
from .equilibrium import (Equilibrium, VerificationReport, enumerate_equilibria,
                          supporting_belief, verify_equilibrium)

__version__ = "0.1.0"
