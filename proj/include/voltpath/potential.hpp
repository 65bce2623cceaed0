#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "voltpath/graph.hpp"
#include "voltpath/rational.hpp"

namespace voltpath {

/// Nodes grouped by BFS level; the edge multiset is preserved, each edge
/// annotated with its endpoint levels.
struct LevelUnitGraph {
    struct AnnotatedEdge {
        int id = 0;
        int level_u = 0;
        int level_v = 0;
    };
    std::vector<std::vector<NodeIndex>> groups; // groups[k] = nodes at level k, ascending
    std::vector<AnnotatedEdge> edges;           // one per original edge, in id order
};

inline LevelUnitGraph level_unit_graph(const WeightedMultiGraph& g, const LevelAssignment& lv) {
    LevelUnitGraph out;
    int max_level = 0;
    for (int l : lv.level)
        max_level = std::max(max_level, l);
    out.groups.assign(static_cast<std::size_t>(max_level) + 1, {});
    for (NodeIndex n = 0; n < g.node_count(); ++n)
        out.groups[static_cast<std::size_t>(lv.of(n))].push_back(n);
    out.edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        out.edges.push_back({e.id, lv.of(e.u), lv.of(e.v)});
    return out;
}

/// Cost statistics for the edges crossing one consecutive level pair.
struct LevelPairCosts {
    Decimal min_cost;
    Decimal cost_sum;
    int edge_count = 0;

    double avg() const { return cost_sum.to_double() / edge_count; }
    Rational avg_exact() const { return Rational::from_decimal(cost_sum) / Rational(edge_count); }
};

/// Per-pair min/avg statistics for levels 1..N (N = level of terminal), plus
/// same-level edge counts. Edges deeper than the terminal's level do not
/// enter the pair statistics.
struct InterLevelCosts {
    std::vector<LevelPairCosts> pairs;  // pairs[k-1] covers levels (k-1, k)
    std::vector<int> same_level_counts; // indexed by level, all levels present in the graph
};

inline InterLevelCosts inter_level_costs(const WeightedMultiGraph& g, const LevelAssignment& lv) {
    InterLevelCosts out;
    int max_level = 0;
    for (int l : lv.level)
        max_level = std::max(max_level, l);
    out.pairs.assign(static_cast<std::size_t>(lv.depth), LevelPairCosts{});
    out.same_level_counts.assign(static_cast<std::size_t>(max_level) + 1, 0);
    for (const Edge& e : g.edges()) {
        int lu = lv.of(e.u), lw = lv.of(e.v);
        int diff = lu < lw ? lw - lu : lu - lw;
        assert(diff <= 1); // BFS levels: skip-level edges cannot occur
        if (diff == 0) {
            ++out.same_level_counts[static_cast<std::size_t>(lu)];
            continue;
        }
        int k = std::max(lu, lw);
        if (k > lv.depth)
            continue;
        LevelPairCosts& p = out.pairs[static_cast<std::size_t>(k - 1)];
        if (p.edge_count == 0 || e.cost < p.min_cost)
            p.min_cost = e.cost;
        p.cost_sum = p.cost_sum + e.cost;
        ++p.edge_count;
    }
    return out;
}

/// Length of the hypotenuse ST: the sum over consecutive level pairs of the
/// minimum crossing-edge cost. Exact, since every cost is a finite decimal.
inline Decimal estimate_st(const InterLevelCosts& c) {
    Decimal st;
    for (const LevelPairCosts& p : c.pairs)
        st = st + p.min_cost;
    return st;
}

/// How to pick the graph voltage V_max inside the open interval (0, ST).
struct VmaxPolicy {
    enum class Kind { Explicit, HalfSt, LargestIntegerBelow };

    Kind kind = Kind::HalfSt;
    Decimal value; // only for Explicit

    static VmaxPolicy explicit_value(Decimal v) { return {Kind::Explicit, v}; }
    static VmaxPolicy half_st() { return {Kind::HalfSt, Decimal{}}; }
    static VmaxPolicy largest_integer_below() { return {Kind::LargestIntegerBelow, Decimal{}}; }
};

/// Picks V_max in (0, ST). Explicit values are validated against the open
/// interval; LargestIntegerBelow falls back to ST/2 when no positive integer
/// fits (ST <= 1).
inline Decimal select_vmax(const Decimal& st, const VmaxPolicy& policy) {
    switch (policy.kind) {
    case VmaxPolicy::Kind::Explicit:
        if (!policy.value.is_positive() || policy.value >= st)
            throw OutOfIntervalError("v_max " + policy.value.to_string() + " is outside the open interval (0, " +
                                     st.to_string() + ")");
        return policy.value;
    case VmaxPolicy::Kind::HalfSt:
        return st.half();
    case VmaxPolicy::Kind::LargestIntegerBelow:
        if (auto below = st.largest_integer_below())
            return Decimal(*below);
        return st.half();
    }
    return st.half();
}

/// Lengths of the per-level segments the ideal points cut out of ST,
/// proportional to the average crossing cost of each level pair.
inline std::vector<double> segment_lengths(const InterLevelCosts& c, const Decimal& st) {
    double total = 0.0;
    for (const LevelPairCosts& p : c.pairs)
        total += p.avg();
    std::vector<double> out;
    out.reserve(c.pairs.size());
    double st_value = st.to_double();
    for (const LevelPairCosts& p : c.pairs)
        out.push_back(st_value * (p.avg() / total));
    return out;
}

/// Canonical smallest-integer form of the segment ratio
/// avg(0,1) : avg(1,2) : ... as decimal integer strings, e.g. {"8", "19"}.
inline std::vector<std::string> segment_ratio(const InterLevelCosts& c) {
    std::vector<Rational> avgs;
    avgs.reserve(c.pairs.size());
    for (const LevelPairCosts& p : c.pairs)
        avgs.push_back(p.avg_exact());
    mpz_class lcm_den = 1;
    for (const Rational& a : avgs)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.denominator().get_mpz_t());
    std::vector<mpz_class> terms;
    terms.reserve(avgs.size());
    mpz_class gcd_all = 0;
    for (const Rational& a : avgs) {
        mpz_class t = a.numerator() * (lcm_den / a.denominator());
        mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), t.get_mpz_t());
        terms.push_back(t);
    }
    std::vector<std::string> out;
    out.reserve(terms.size());
    for (mpz_class& t : terms) {
        if (gcd_all != 0)
            t /= gcd_all;
        out.push_back(t.get_str());
    }
    return out;
}

/// For one level pair: the crossing edge whose cost lies nearest the ideal
/// segment length. A heuristic path suggestion, not a guaranteed optimum.
struct NearestEdgeChoice {
    int pair_index = 0; // 0 = levels (0,1)
    int edge_id = -1;
    double segment = 0.0;
    double distance = 0.0;
};

inline std::vector<NearestEdgeChoice> nearest_cost_edges(const WeightedMultiGraph& g, const LevelAssignment& lv,
                                                         const std::vector<double>& segments) {
    std::vector<NearestEdgeChoice> out(segments.size());
    for (std::size_t k = 0; k < segments.size(); ++k)
        out[k] = {static_cast<int>(k), -1, segments[k], 0.0};
    for (const Edge& e : g.edges()) {
        int lu = lv.of(e.u), lw = lv.of(e.v);
        if (lu == lw)
            continue;
        int k = std::max(lu, lw);
        if (k < 1 || k > static_cast<int>(segments.size()))
            continue;
        NearestEdgeChoice& choice = out[static_cast<std::size_t>(k - 1)];
        double dist = std::abs(e.cost.to_double() - choice.segment);
        // Ties go to the lower edge id; edges arrive in ascending id order.
        if (choice.edge_id < 0 || dist < choice.distance) {
            choice.edge_id = e.id;
            choice.distance = dist;
        }
    }
    return out;
}

/// 3-D potential-column export: one column per node, height = potential.
/// Without a solved circuit only the start (V_max) and terminal (0) heights
/// are known.
struct PotentialColumn {
    NodeIndex node = 0;
    int level = 0;
    double height = 0.0;
    std::string height_exact; // empty unless solved in exact mode
};

struct PotentialColumns {
    std::vector<PotentialColumn> columns; // ascending node index
};

inline PotentialColumns potential_columns(const WeightedMultiGraph& g, const LevelAssignment& lv,
                                          const Decimal& v_max) {
    PotentialColumns out;
    out.columns.push_back({g.start(), lv.of(g.start()), v_max.to_double(), v_max.to_string()});
    out.columns.push_back({g.terminal(), lv.of(g.terminal()), 0.0, "0"});
    if (out.columns[0].node > out.columns[1].node)
        std::swap(out.columns[0], out.columns[1]);
    return out;
}

template <typename S>
struct CircuitSolution;

template <typename S>
PotentialColumns potential_columns(const WeightedMultiGraph& g, const LevelAssignment& lv,
                                   const CircuitSolution<S>& solution) {
    PotentialColumns out;
    out.columns.reserve(static_cast<std::size_t>(g.node_count()));
    for (NodeIndex n = 0; n < g.node_count(); ++n) {
        const S& height = solution.potentials[static_cast<std::size_t>(n)];
        out.columns.push_back({n, lv.of(n), NumberTraits<S>::to_double(height), NumberTraits<S>::exact_str(height)});
    }
    return out;
}

} // namespace voltpath
