#include "bh/domains.hpp"

#include <cmath>
#include <stdexcept>

#include "bh/rng.hpp"

namespace bh {

namespace {

constexpr double kDefaultBoxHalfWidth = 5.0;
constexpr int kMaxRejectionAttempts = 2000;

// Extent of the ambient-norm rho-ball along coordinate axis i.
double axis_extent(const NormedSpace& s, double rho, int i) {
    if (s.kind() == NormKind::weighted_euclidean)
        return rho / std::sqrt(s.weights()[i]);
    return rho;
}

} // namespace

ConvexDomain ConvexDomain::whole_space(NormedSpace space) {
    return ConvexDomain(std::move(space), DomainKind::whole_space);
}

ConvexDomain ConvexDomain::open_ball(NormedSpace space, Vec center, double radius) {
    require_same_dim(static_cast<std::size_t>(space.dim()), center.size());
    if (!(radius > 0.0))
        throw std::invalid_argument("open_ball: radius must be positive");
    ConvexDomain d(std::move(space), DomainKind::open_ball);
    d.center_ = std::move(center);
    d.radius_ = radius;
    return d;
}

ConvexDomain ConvexDomain::open_box(NormedSpace space, Vec lower, Vec upper) {
    require_same_dim(static_cast<std::size_t>(space.dim()), lower.size());
    require_same_dim(lower.size(), upper.size());
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (!(lower[i] < upper[i]))
            throw std::invalid_argument("open_box: lower must be < upper");
    ConvexDomain d(std::move(space), DomainKind::open_box);
    d.lower_ = std::move(lower);
    d.upper_ = std::move(upper);
    return d;
}

ConvexDomain ConvexDomain::halfspace_intersection(NormedSpace space,
                                                  std::vector<Halfspace> faces) {
    for (const auto& f : faces)
        require_same_dim(static_cast<std::size_t>(space.dim()), f.normal.size());
    ConvexDomain d(std::move(space), DomainKind::halfspaces);
    d.faces_ = std::move(faces);
    return d;
}

bool ConvexDomain::contains(const Vec& x) const {
    require_same_dim(static_cast<std::size_t>(space_.dim()), x.size());
    switch (kind_) {
    case DomainKind::whole_space:
        return true;
    case DomainKind::open_ball:
        return space_.norm(sub(x, center_)) < radius_;
    case DomainKind::open_box:
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(lower_[i] < x[i] && x[i] < upper_[i]))
                return false;
        return true;
    case DomainKind::halfspaces:
        for (const auto& f : faces_)
            if (!(pairing(f.normal, x) < f.offset))
                return false;
        return true;
    }
    return false;
}

bool ConvexDomain::contains_shrunk(const Vec& x, double rho) const {
    if (rho == 0.0)
        return contains(x);
    if (rho < 0.0)
        throw std::invalid_argument("contains_shrunk: rho must be nonnegative");
    require_same_dim(static_cast<std::size_t>(space_.dim()), x.size());
    switch (kind_) {
    case DomainKind::whole_space:
        return true;
    case DomainKind::open_ball:
        return space_.norm(sub(x, center_)) < radius_ - rho;
    case DomainKind::open_box:
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double ext = axis_extent(space_, rho, static_cast<int>(i));
            if (!(lower_[i] < x[i] - ext && x[i] + ext < upper_[i]))
                return false;
        }
        return true;
    case DomainKind::halfspaces:
        // sup over |h| <= rho of <a, h> equals rho |a|_*
        for (const auto& f : faces_)
            if (!(pairing(f.normal, x) + rho * space_.dual_norm(f.normal) < f.offset))
                return false;
        return true;
    }
    return false;
}

void ConvexDomain::sampling_box(Vec& lo, Vec& hi) const {
    const int n = space_.dim();
    lo.assign(n, -kDefaultBoxHalfWidth);
    hi.assign(n, kDefaultBoxHalfWidth);
    switch (kind_) {
    case DomainKind::open_ball:
        for (int i = 0; i < n; ++i) {
            const double ext = axis_extent(space_, radius_, i);
            lo[i] = center_[i] - ext;
            hi[i] = center_[i] + ext;
        }
        break;
    case DomainKind::open_box:
        lo = lower_;
        hi = upper_;
        break;
    default:
        break;
    }
}

Vec ConvexDomain::anchor() const {
    const int n = space_.dim();
    switch (kind_) {
    case DomainKind::whole_space:
        return Vec(n, 0.0);
    case DomainKind::open_ball:
        return center_;
    case DomainKind::open_box: {
        Vec m(n);
        for (int i = 0; i < n; ++i)
            m[i] = 0.5 * (lower_[i] + upper_[i]);
        return m;
    }
    case DomainKind::halfspaces:
        return Vec(n, 0.0); // callers fall back to sampling when infeasible
    }
    return Vec(n, 0.0);
}

namespace {

Vec draw_in_box(CounterRng& rng, const Vec& lo, const Vec& hi) {
    Vec x(lo.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = rng.uniform(lo[i], hi[i]);
    return x;
}

bool in_box(const Vec& x, const Vec& lo, const Vec& hi) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < lo[i] || x[i] > hi[i])
            return false;
    return true;
}

Vec rejection_point(const ConvexDomain& d, double rho, CounterRng& rng,
                    const Vec& lo, const Vec& hi) {
    for (int a = 0; a < kMaxRejectionAttempts; ++a) {
        Vec x = draw_in_box(rng, lo, hi);
        if (d.contains_shrunk(x, rho))
            return x;
    }
    throw std::runtime_error(
        "sample_pairs: could not place a point after " +
        std::to_string(kMaxRejectionAttempts) +
        " attempts; domain is infeasible or too thin for rho");
}

// Axes followed by the +/-1 diagonal patterns (first component fixed
// positive).  These hit the exact extremal directions of the l-inf
// counterexamples.
std::vector<Vec> structured_directions(int n) {
    std::vector<Vec> dirs;
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0.0);
        e[i] = 1.0;
        dirs.push_back(e);
    }
    const int patterns = 1 << (n - 1);
    for (int m = 0; m < patterns; ++m) {
        Vec d(n, 1.0);
        for (int i = 1; i < n; ++i)
            if (m & (1 << (i - 1)))
                d[i] = -1.0;
        dirs.push_back(d);
    }
    return dirs;
}

} // namespace

Vec sample_point(const ConvexDomain& domain, double rho, std::uint64_t seed,
                 std::uint64_t stream) {
    Vec lo, hi;
    domain.sampling_box(lo, hi);
    CounterRng rng(seed, stream);
    return rejection_point(domain, rho, rng, lo, hi);
}

std::vector<std::pair<Vec, Vec>> sample_pairs(const ConvexDomain& domain, double rho,
                                              int count, std::uint64_t seed) {
    if (count < 1)
        throw std::invalid_argument("sample_pairs: count must be >= 1");
    if (rho < 0.0)
        throw std::invalid_argument("sample_pairs: rho must be nonnegative");
    Vec lo, hi;
    domain.sampling_box(lo, hi);
    const int n = domain.space().dim();

    Vec base = domain.anchor();
    bool base_ok = domain.contains_shrunk(base, rho);
    if (!base_ok) {
        // deterministic fallback anchor from a reserved stream
        base = sample_point(domain, rho, seed, 0xa11c0);
        base_ok = true;
    }
    const auto dirs = structured_directions(n);
    const double scales[] = {1.0, 0.5, 2.0, 0.25};

    std::vector<std::pair<Vec, Vec>> pairs;
    pairs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        CounterRng rng(seed, 0x10000u + static_cast<std::uint64_t>(i));
        const int cat = i % 8;
        Vec x, y;
        bool done = false;
        switch (cat) {
        case 3:
        case 7: {
            // structured axis/diagonal pair from the anchor
            const std::uint64_t j = 2 * (static_cast<std::uint64_t>(i) / 8) + (cat == 7 ? 1 : 0);
            const Vec& dir = dirs[j % dirs.size()];
            double s = scales[(j / dirs.size()) % 4];
            bool ok = false;
            for (int h = 0; h < 200; ++h) {
                Vec cand = base;
                for (int k = 0; k < n; ++k)
                    cand[k] += s * dir[k];
                if (domain.contains_shrunk(cand, rho) && in_box(cand, lo, hi)) {
                    x = base;
                    y = cand;
                    ok = true;
                    break;
                }
                s *= 0.5;
            }
            if (ok)
                done = true;
            break;
        }
        case 2: {
            // collinear pair inside a sampled segment
            Vec a = rejection_point(domain, rho, rng, lo, hi);
            Vec b = rejection_point(domain, rho, rng, lo, hi);
            const double t = rng.uniform(0.05, 0.95);
            x = a;
            y = combine(1.0 - t, a, t, b);
            done = true;
            break;
        }
        case 4: {
            // short separation, log-uniform scale
            x = rejection_point(domain, rho, rng, lo, hi);
            Vec d(n);
            for (int k = 0; k < n; ++k)
                d[k] = rng.uniform(-1.0, 1.0);
            const double delta = std::pow(10.0, rng.uniform(-6.0, 0.0));
            Vec cand = x;
            for (int k = 0; k < n; ++k)
                cand[k] += delta * d[k];
            if (domain.contains_shrunk(cand, rho) && in_box(cand, lo, hi)) {
                y = cand;
                done = true;
            }
            break;
        }
        case 5: {
            // near-boundary: push along a ray until it leaves the
            // feasible region (or the sampling box), then back off
            x = rejection_point(domain, rho, rng, lo, hi);
            Vec d(n);
            double dn = 0.0;
            for (int k = 0; k < n; ++k) {
                d[k] = rng.uniform(-1.0, 1.0);
                dn += d[k] * d[k];
            }
            if (dn == 0.0)
                break;
            auto feasible = [&](double t) {
                Vec cand = x;
                for (int k = 0; k < n; ++k)
                    cand[k] += t * d[k];
                return domain.contains_shrunk(cand, rho) && in_box(cand, lo, hi);
            };
            double t_lo = 0.0, t_hi = 1.0;
            int grow = 0;
            while (feasible(t_hi) && grow++ < 64) {
                t_lo = t_hi;
                t_hi *= 2.0;
            }
            if (grow >= 64)
                break;
            for (int b = 0; b < 60; ++b) {
                const double mid = 0.5 * (t_lo + t_hi);
                (feasible(mid) ? t_lo : t_hi) = mid;
            }
            if (t_lo > 0.0) {
                y = x;
                for (int k = 0; k < n; ++k)
                    y[k] += t_lo * d[k];
                done = true;
            }
            break;
        }
        default:
            break;
        }
        if (!done) {
            x = rejection_point(domain, rho, rng, lo, hi);
            y = rejection_point(domain, rho, rng, lo, hi);
        }
        pairs.emplace_back(std::move(x), std::move(y));
    }
    return pairs;
}

std::vector<Vec> segment_points(const Vec& x, const Vec& y, int n) {
    if (n < 1)
        throw std::invalid_argument("segment_points: n must be >= 1");
    require_same_dim(x.size(), y.size());
    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n);
        pts.push_back(combine(1.0 - t, x, t, y));
    }
    return pts;
}

} // namespace bh
