from msat.solvers.auto import predicted_costs, solve_auto
from msat.solvers.base import SolveOutcome, default_max_nodes
from msat.solvers.brute import solve_brute
from msat.solvers.dual import solve_dual
from msat.solvers.graph import solve_assignment_graph
from msat.solvers.greedy import mnd_branch, solve_greedy, solve_m_n_d
from msat.solvers.special import solve_special
from msat.solvers.taud import solve_tau_d

# CLI names; every entry accepts (instance, max_nodes=...)
ALGORITHMS = {
    "auto": solve_auto,
    "brute": lambda instance, max_nodes=None: solve_brute(instance),
    "graph": solve_assignment_graph,
    "greedy": lambda instance, max_nodes=None: solve_greedy(instance),
    "mnd": solve_m_n_d,
    "dual": solve_dual,
    "taud": solve_tau_d,
}

__all__ = [
    "ALGORITHMS", "SolveOutcome", "default_max_nodes", "mnd_branch", "predicted_costs",
    "solve_assignment_graph", "solve_auto", "solve_brute", "solve_dual", "solve_greedy",
    "solve_m_n_d", "solve_special", "solve_tau_d",
]
