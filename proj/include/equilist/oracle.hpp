#ifndef EQUILIST_ORACLE_HPP
#define EQUILIST_ORACLE_HPP

#include "equilist/coloring.hpp"

namespace equilist {

struct OracleResult {
    enum class Outcome { Found, NoneExists, BudgetExceeded };
    Outcome outcome = Outcome::NoneExists;
    Coloring coloring;     // populated for Found
    long long nodes = 0;   // assignments explored
};

/// Exhaustive strongly-equitable list-coloring search. Backtracks over
/// vertices in degree-descending order (ids break ties), pruning on the
/// class-size cap and the full-class count; empty classes with identical
/// list-membership patterns are interchangeable and only the smallest is
/// tried. Complete within the node budget.
OracleResult oracle_se_color(const Instance& inst, long long budget = 20000000);

} // namespace equilist

#endif
