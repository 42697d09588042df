"""Consequent-growing rule tree for one antecedent.

Root-to-node paths encode fixed-gap consequents; a node's end-time list
holds the anchors (antecedent end times shifted by the node's root
distance) at which the whole path occurs, so its cardinality is the rule's
support.  The three tree-level pruning strategies are gated by the
cumulative strategy level: root-distance gating (level >= 2), node
deactivation (>= 3), short rule suppression (>= 4).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .model import EpisodeRule, EventSequence, contains_subsequence, rule_confidence


@dataclass
class TreeNode:
    event: int
    tlist: tuple[int, ...]
    edge_gap: int
    root_distance: int
    path_events: tuple[int, ...]
    path_gaps: tuple[int, ...]
    active: bool = True


@dataclass
class RuleTree:
    antecedent: tuple[int, ...]
    antecedent_support: int
    root_tlist: tuple[int, ...]
    nodes: list[TreeNode] = field(default_factory=list)
    emitted: list[EpisodeRule] = field(default_factory=list)
    pruned_dbps: int = 0
    pruned_nbps: int = 0
    pruned_lbps: int = 0


def node_to_rule(tree: RuleTree, node: TreeNode) -> EpisodeRule:
    """The rule encoded by the path from the root to ``node``."""
    support = len(node.tlist)
    return EpisodeRule(
        antecedent=tree.antecedent,
        elapse=node.path_gaps[0],
        consequent=node.path_events,
        gaps=node.path_gaps[1:],
        support=support,
        confidence=rule_confidence(support, tree.antecedent_support),
    )


def grow_tree(
    seq: EventSequence,
    query: Sequence[int],
    antecedent: Sequence[int],
    antecedent_support: int,
    kept_end_times: Sequence[int],
    max_first: int,
    max_last: int,
    min_freq: Fraction,
    epsilon: int,
    strategies: int,
) -> RuleTree:
    """Grow the rule tree over search distances 1..epsilon.

    ``kept_end_times`` seed the root; ``min_freq`` is the exact admission
    threshold (antecedent support times the confidence floor).  When the
    distance strategies are disabled the caller passes max_first ==
    max_last == epsilon so they never bite.
    """
    query = tuple(query)
    tree = RuleTree(tuple(antecedent), antecedent_support, tuple(kept_end_times))
    if not kept_end_times:
        return tree
    qe_first = query[0]
    root_active = True
    for i in range(1, epsilon + 1):
        if strategies >= 3:
            if i == max_first + 1:
                root_active = False
                for node in tree.nodes:
                    if node.active and qe_first not in node.path_events:
                        node.active = False
                        tree.pruned_nbps += 1
            if i == max_last + 1:
                root_active = False
                for node in tree.nodes:
                    if node.active and not contains_subsequence(node.path_events, query):
                        node.active = False
                        tree.pruned_nbps += 1
        frontier = [w for w in tree.nodes if w.active and w.root_distance < i]
        candidates: dict[int, list[int]] = {}
        for t in kept_end_times:
            shifted = t + i
            if shifted > seq.end_time:
                break
            for e in seq.events_at(shifted):
                candidates.setdefault(e, []).append(shifted)
        for e in sorted(candidates):
            utimes = candidates[e]
            if len(utimes) < min_freq:
                continue
            new_nodes: list[TreeNode] = []
            if strategies >= 2:
                admit = i < max_first or (i == max_first and e == qe_first)
                if admit and strategies >= 3 and not root_active:
                    admit = False
                if not admit:
                    tree.pruned_dbps += 1
            else:
                admit = True
            if admit:
                new_nodes.append(
                    TreeNode(e, tuple(utimes), i, i, (e,), (i,))
                )
            uset = set(utimes)
            for w in frontier:
                gap = i - w.root_distance
                flist = tuple(t + gap for t in w.tlist if t + gap in uset)
                if len(flist) >= min_freq:
                    new_nodes.append(
                        TreeNode(
                            e,
                            flist,
                            gap,
                            i,
                            w.path_events + (e,),
                            w.path_gaps + (gap,),
                        )
                    )
            for node in new_nodes:
                tree.nodes.append(node)
                if strategies >= 4 and len(node.path_events) < len(query):
                    tree.pruned_lbps += 1
                else:
                    tree.emitted.append(node_to_rule(tree, node))
    return tree
