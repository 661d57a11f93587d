#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chainkit/geometry.hpp"

namespace chainkit {

// Immutable polygonal chain. Vertices are kept as structure-of-arrays so the
// focal-sum kernels can run directly over contiguous coordinate slices.
// All public indices in reports and witnesses are 1-based; the accessors
// below are 0-based.
class PolygonalChain {
public:
    explicit PolygonalChain(const std::vector<Point>& vertices);
    PolygonalChain(std::vector<double> xs, std::vector<double> ys);

    std::size_t size() const { return xs_.size(); }
    Point vertex(std::size_t idx0) const { return {xs_[idx0], ys_[idx0]}; }
    Point front() const { return vertex(0); }
    Point back() const { return vertex(size() - 1); }

    std::span<const double> xs() const { return xs_; }
    std::span<const double> ys() const { return ys_; }

    std::vector<Point> points() const;

    // largest coordinate magnitude, floored at 1; scales absolute cutoffs
    double coord_scale() const { return scale_; }
    double abs_floor() const { return kAbsTol * scale_; }

    // consecutive duplicate vertices are allowed but flagged
    bool has_degenerate_segments() const;

private:
    void validate() const;

    std::vector<double> xs_;
    std::vector<double> ys_;
    double scale_ = 1.0;
};

// Violating or achieving triple, 1-based indices i < j < k. A ratio of
// +infinity marks the unbounded case (coincident endpoints around a
// distinct interior vertex).
struct TripleWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    double ratio = 1.0;
};

struct MinC {
    double value = 1.0;  // +infinity when unbounded
    std::optional<TripleWitness> witness;

    bool unbounded() const;
};

struct CChainCheck {
    bool is_c_chain = true;
    std::optional<TripleWitness> witness;  // present iff !is_c_chain
};

struct SimplicityCheck {
    bool simple = true;
    std::optional<std::pair<std::size_t, std::size_t>> offending;  // 1-based segment indices
};

double chain_length(const PolygonalChain& chain);

// chain_length / |p_1 p_n|; throws ZeroBaselineError when the endpoints
// coincide within tolerance.
double stretch_factor(const PolygonalChain& chain);

// (|p_i p_j| + |p_j p_k|) / |p_i p_k| for 1-based i < j < k; +infinity when
// the denominator vanishes but the numerator does not, 1 when both vanish.
double triple_ratio(const PolygonalChain& chain, std::size_t i, std::size_t j, std::size_t k);

// Exact maximum triple ratio over all C(n,3) triples, with the
// lexicographically smallest achieving witness. Theta(n^3) via the
// focal-sum max kernel.
MinC min_c_bruteforce(const PolygonalChain& chain);

CChainCheck is_c_chain_bruteforce(const PolygonalChain& chain, double c);

// O(n^2) pairwise segment test. Consecutive segments may share exactly
// their common endpoint; all other contact (including collinear overlap and
// a closing p_1 = p_n) is a violation.
SimplicityCheck is_simple(const PolygonalChain& chain);

PolygonalChain transform(const PolygonalChain& chain, double rotation, double scale,
                         Point translation);

// Linear-time test for the c = 1 case: all vertices on the line through the
// first two distinct vertices, in order.
bool is_one_chain_linear(const PolygonalChain& chain);

}  // namespace chainkit
