#ifndef EQUILIST_SOLVER_HPP
#define EQUILIST_SOLVER_HPP

#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "equilist/recolor.hpp"

namespace equilist {

using Rational = boost::multiprecision::cpp_rational;

/// Half-integer weighting of the inaccessible colors.
using MuMap = std::map<Color, Rational>;

struct SoloAnalysis {
    Vertex z = -1;
    std::vector<Vertex> S_z;       // solo neighbors, sorted
    std::vector<Vertex> S_star;    // useful subset, sorted
    MuMap mu;
    Rational w_z;
    std::vector<Color> Psi;        // colors of Phi whose class z can join
    std::vector<Color> Theta;      // forward closure of Psi
    int edges_to_B = 0;
};

struct ExtremeWitness {
    Vertex z0 = -1;
    std::vector<Color> Theta0;
    std::vector<Color> Upsilon;
    std::vector<Color> UpsilonPrime;
    SoloAnalysis analysis;
};

struct SolveStats {
    long long improve_steps = 0;
    long long max_improve_steps_per_insertion = 0;
    long long direct_insertions = 0;
    long long finisher_runs = 0;
    long long extreme_case1 = 0;
    long long extreme_case2 = 0;
    long long finisher_improvements = 0;
};

/// Weight of the pair (x, y): mu(f(y)) / ||y, class(x)|| when f(x) is in
/// L(y) and xy is an edge, else 0.
Rational pair_weight(const PartialState& st, const MuMap& mu, Vertex x, Vertex y);

/// Total weight of x against B.
Rational vertex_weight(const PartialState& st, const MuMap& mu, Vertex x);

/// Maximum-weight solo vertex (full-accessible-class constraint applied),
/// with its solo-neighbor analysis. `g` is the slack of mu(Phi) >= b - g and
/// selects which lemma conclusions are asserted. Requires the improvement
/// fixpoint; raises InternalInvariantViolation when an asserted inequality
/// fails (expected only off class B).
SoloAnalysis find_solo(const PartialState& st, const MuMap& mu, const Rational& g);

/// Inserts the pending vertex p of st into the current level: direct
/// insertion with a witness shift when possible, otherwise the improvement
/// loop followed by the structured extension of a blocked state.
void insert_pending(PartialState& st, Vertex p, Trace& trace, SolveStats& stats);

/// Computes the strongly equitable list coloring promised for graphs of
/// class B with r >= max(9, max degree). Optionally records a replayable
/// trace and solve statistics.
Coloring se_color(const Instance& inst, Trace* trace = nullptr, SolveStats* stats = nullptr);

} // namespace equilist

#endif
