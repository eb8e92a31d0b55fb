"""Complementation of nondeterministic Buchi word automata.

Four constructions over a shared codeterministic-run-DAG toolkit: the
general rank-based complement, its max-rank-2 variant and the slice-based
complement for finitely ambiguous automata, and the quadruple construction
for limit-deterministic automata.  Everything is checked against bounded
lasso-word oracles.
"""

from .core import (AmbiguityWitness, ClassificationReport, LdbwPartition, Nbw,
                   classify, complete, infinite_ambiguity_witness, ldbw_partition,
                   make_nbw, maximal_deterministic_part)
from .dot import to_dot
from .fileformat import parse, write
from .fixtures import fixture
from .lang import (CheckReport, build_complement, complement_check, contains,
                   count_accepting_runs, intersect, is_empty, member,
                   member_naive, random_nbw)
from .ldbwcomp import (LdbwDag, NsbcMacrostate, ldbw_codet_dag, nsbc_complement,
                       nsbc_complement_labeled)
from .rankcomp import (RankMacrostate, covering_rankings, rank_subsumes,
                       rkc_complement, rkc_complement_labeled)
from .rundag import (DagReport, LassoDag, analyze_dag, classical_ranks,
                     lasso_dag, pruning_survivors, reduced_successors)
from .slicecomp import (SliceMacrostate, disambiguate, slc_complement_fa,
                        slc_complement_fa_labeled, slc_subsumes, slice_successor)
from .words import LassoWord, canonical_lasso, enumerate_lassos, lasso

__all__ = [name for name in dir() if not name.startswith("_")]
