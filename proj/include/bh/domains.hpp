#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bh/spaces.hpp"

namespace bh {

enum class DomainKind { whole_space, open_ball, open_box, halfspaces };

struct Halfspace {
    Covector normal;
    double offset; // <normal, x> < offset
};

// Open convex subset of the ambient space.  Membership and the inner
// shrink O_rho (all points whose closed rho-ball stays inside) are
// evaluated analytically per kind.
class ConvexDomain {
public:
    static ConvexDomain whole_space(NormedSpace space);
    static ConvexDomain open_ball(NormedSpace space, Vec center, double radius);
    static ConvexDomain open_box(NormedSpace space, Vec lower, Vec upper);
    static ConvexDomain halfspace_intersection(NormedSpace space, std::vector<Halfspace> faces);

    DomainKind kind() const { return kind_; }
    const NormedSpace& space() const { return space_; }

    bool contains(const Vec& x) const;

    // True iff x + h lies in the set for every h with norm(h) <= rho.
    bool contains_shrunk(const Vec& x, double rho) const;

    // Axis-aligned box that the rejection sampler draws from.
    // Unbounded kinds fall back to [-5, 5]^dim.
    void sampling_box(Vec& lo, Vec& hi) const;

    // A deterministic interior point (domain center), used as the base
    // of the structured sample pairs.
    Vec anchor() const;

private:
    ConvexDomain(NormedSpace space, DomainKind kind)
        : space_(std::move(space)), kind_(kind) {}

    NormedSpace space_;
    DomainKind kind_;
    Vec center_;
    double radius_ = 0.0;
    Vec lower_, upper_;
    std::vector<Halfspace> faces_;
};

// Deterministic pairs with contains_shrunk(x, rho) and
// contains_shrunk(y, rho); pair i depends only on (seed, i), so
// prefixes are consistent across budgets.  The stream mixes uniform
// pairs with collinear, short-separation/near-boundary and structured
// axis/diagonal pairs.
std::vector<std::pair<Vec, Vec>> sample_pairs(const ConvexDomain& domain, double rho,
                                              int count, std::uint64_t seed);

// A single point of the pair stream (x of pair i).
Vec sample_point(const ConvexDomain& domain, double rho, std::uint64_t seed,
                 std::uint64_t stream);

// x_0, ..., x_n equally spaced from x to y.
std::vector<Vec> segment_points(const Vec& x, const Vec& y, int n);

} // namespace bh
