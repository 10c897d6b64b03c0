"""Exact Clifford-orbit reachability graphs and double-coset contracted graphs.

Core surface:

- ring.Cyclo8: exact arithmetic for all Clifford matrix entries
- clifford: phase-canonical exact operators and generator words
- group: BFS group enumeration, left/double cosets, closed-form orders
- states: statevectors, named families, fixtures, stabilizer tableaux
- entropy: entropy vectors, MMI checks, rank-based stabilizer entropies
- graphs: reachability graphs, contraction, isomorphism, exports
- census: stabilizer-state orbit distribution tables
- verify: named reproduction suites behind `coset-graphs verify`
"""

from .ring import Cyclo8
from .clifford import (
    CliffordElement,
    GeneratorLabel,
    compose,
    element_of,
    generator,
    identity,
    inverse,
    verify_relation,
)
from .group import (
    CosetPartition,
    EnumeratedGroup,
    clifford_order,
    diversity_bound,
    double_cosets,
    enumerate_group,
    left_cosets,
    load_group,
    local_subgroup_order,
    save_group,
    stabilizer_state_count,
)
from .states import (
    PureState,
    StabilizerTableau,
    apply,
    apply_word,
    basis_state,
    canonicalize,
    dicke,
    fixture,
    from_bit_address,
    ghz,
    parse_state_spec,
    tableau_apply,
    tableau_canonical,
    tableau_from_circuit,
    w_state,
)
from .entropy import (
    EntropyVector,
    entropy_vector,
    mmi_check,
    mmi_scan,
    purity_check,
    stabilizer_entropy_vector,
    subsystem_entropy,
)
from .graphs import (
    ContractedGraph,
    ReachabilityGraph,
    contract,
    diameter,
    entropic_diversity,
    export,
    isomorphic,
    reachability,
    stabilizer_subgroup,
)
__version__ = "0.1.0"
