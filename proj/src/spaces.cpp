#include "bh/spaces.hpp"

#include <cmath>
#include <cstdlib>

namespace bh {

std::string to_string(NormKind k) {
    switch (k) {
    case NormKind::euclidean: return "euclidean";
    case NormKind::weighted_euclidean: return "weighted";
    case NormKind::lp: return "lp";
    case NormKind::linf: return "linf";
    case NormKind::l1: return "l1";
    }
    return "?";
}

NormedSpace NormedSpace::euclidean(int dim) {
    if (dim < 1)
        throw std::invalid_argument("dim must be positive");
    return NormedSpace(dim, NormKind::euclidean);
}

NormedSpace NormedSpace::weighted(Vec weights) {
    if (weights.empty())
        throw std::invalid_argument("dim must be positive");
    for (double w : weights)
        if (!(w > 0.0))
            throw std::invalid_argument("weights must be positive");
    NormedSpace s(static_cast<int>(weights.size()), NormKind::weighted_euclidean);
    s.weights_ = std::move(weights);
    return s;
}

NormedSpace NormedSpace::lp(int dim, double p) {
    if (dim < 1)
        throw std::invalid_argument("dim must be positive");
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("lp requires finite p > 1; use l1/linf tags otherwise");
    NormedSpace s(dim, NormKind::lp);
    s.p_ = p;
    return s;
}

NormedSpace NormedSpace::linf(int dim) {
    if (dim < 1)
        throw std::invalid_argument("dim must be positive");
    return NormedSpace(dim, NormKind::linf);
}

NormedSpace NormedSpace::l1(int dim) {
    if (dim < 1)
        throw std::invalid_argument("dim must be positive");
    return NormedSpace(dim, NormKind::l1);
}

namespace {

double norm_l1(const Vec& v) {
    double s = 0.0;
    for (double c : v)
        s += std::abs(c);
    return s;
}

double norm_linf(const Vec& v) {
    double m = 0.0;
    for (double c : v)
        m = std::max(m, std::abs(c));
    return m;
}

double norm_l2(const Vec& v) {
    double s = 0.0;
    for (double c : v)
        s += c * c;
    return std::sqrt(s);
}

double norm_p(const Vec& v, double p) {
    double m = norm_linf(v);
    if (m == 0.0)
        return 0.0;
    // scale out the max to avoid overflow for large exponents
    double s = 0.0;
    for (double c : v)
        s += std::pow(std::abs(c) / m, p);
    return m * std::pow(s, 1.0 / p);
}

} // namespace

double NormedSpace::norm(const Vec& v) const {
    require_same_dim(static_cast<std::size_t>(dim_), v.size());
    switch (kind_) {
    case NormKind::euclidean:
        return norm_l2(v);
    case NormKind::weighted_euclidean: {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i)
            s += weights_[i] * v[i] * v[i];
        return std::sqrt(s);
    }
    case NormKind::lp:
        return norm_p(v, p_);
    case NormKind::linf:
        return norm_linf(v);
    case NormKind::l1:
        return norm_l1(v);
    }
    return 0.0;
}

double NormedSpace::dual_norm(const Covector& phi) const {
    require_same_dim(static_cast<std::size_t>(dim_), phi.size());
    switch (kind_) {
    case NormKind::euclidean:
        return norm_l2(phi.c);
    case NormKind::weighted_euclidean: {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i)
            s += phi.c[i] * phi.c[i] / weights_[i];
        return std::sqrt(s);
    }
    case NormKind::lp:
        return norm_p(phi.c, p_ / (p_ - 1.0));
    case NormKind::linf:
        return norm_l1(phi.c);
    case NormKind::l1:
        return norm_linf(phi.c);
    }
    return 0.0;
}

Covector NormedSpace::riesz(const Vec& v) const {
    require_same_dim(static_cast<std::size_t>(dim_), v.size());
    switch (kind_) {
    case NormKind::euclidean:
        return Covector{v};
    case NormKind::weighted_euclidean: {
        Vec c(v.size());
        for (int i = 0; i < dim_; ++i)
            c[i] = weights_[i] * v[i];
        return Covector{std::move(c)};
    }
    default:
        throw RieszUndefinedError();
    }
}

Vec NormedSpace::norming_vector(const Covector& phi, double target_norm) const {
    require_same_dim(static_cast<std::size_t>(dim_), phi.size());
    const double dn = dual_norm(phi);
    if (dn == 0.0)
        throw std::invalid_argument("norming_vector: zero covector");
    if (!(target_norm > 0.0))
        throw std::invalid_argument("norming_vector: target_norm must be positive");
    Vec z(dim_, 0.0);
    switch (kind_) {
    case NormKind::euclidean: {
        for (int i = 0; i < dim_; ++i)
            z[i] = target_norm * phi.c[i] / dn;
        break;
    }
    case NormKind::weighted_euclidean: {
        // rescaled inverse-Riesz vector
        for (int i = 0; i < dim_; ++i)
            z[i] = target_norm * (phi.c[i] / weights_[i]) / dn;
        break;
    }
    case NormKind::lp: {
        const double q = p_ / (p_ - 1.0);
        Vec u(dim_);
        for (int i = 0; i < dim_; ++i) {
            const double a = std::abs(phi.c[i]);
            u[i] = (phi.c[i] < 0.0 ? -1.0 : 1.0) * std::pow(a, q - 1.0);
        }
        const double nu = norm_p(u, p_);
        for (int i = 0; i < dim_; ++i)
            z[i] = target_norm * u[i] / nu;
        break;
    }
    case NormKind::linf: {
        // sign vector; zero components of phi stay zero so the pairing
        // is exactly the l1 dual norm times the target
        for (int i = 0; i < dim_; ++i)
            z[i] = phi.c[i] > 0.0 ? target_norm : (phi.c[i] < 0.0 ? -target_norm : 0.0);
        break;
    }
    case NormKind::l1: {
        int best = 0;
        for (int i = 1; i < dim_; ++i)
            if (std::abs(phi.c[i]) > std::abs(phi.c[best]))
                best = i;
        z[best] = phi.c[best] >= 0.0 ? target_norm : -target_norm;
        break;
    }
    }
    return z;
}

double NormedSpace::parallelogram_defect(const Vec& a, const Vec& b) const {
    const double np = norm(add(a, b));
    const double nm = norm(sub(a, b));
    const double na = norm(a);
    const double nb = norm(b);
    return np * np + nm * nm - 2.0 * na * na - 2.0 * nb * nb;
}

} // namespace bh
