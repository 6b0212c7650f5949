#pragma once

#include <stdexcept>
#include <string>

#include "bh/linalg.hpp"

namespace bh {

enum class NormKind { euclidean, weighted_euclidean, lp, linf, l1 };

std::string to_string(NormKind k);

// Thrown when the Riesz map is requested on a space without an inner
// product.
struct RieszUndefinedError : std::domain_error {
    RieszUndefinedError() : std::domain_error("Riesz map undefined for Banach norm") {}
};

// Coordinate-realized R^n with one of the supported norms.  The dual
// norm is the conjugate-exponent norm of the same family.
class NormedSpace {
public:
    static NormedSpace euclidean(int dim);
    static NormedSpace weighted(Vec weights); // w_i > 0
    static NormedSpace lp(int dim, double p); // p in (1, inf)
    static NormedSpace linf(int dim);
    static NormedSpace l1(int dim);

    int dim() const { return dim_; }
    NormKind kind() const { return kind_; }
    double p() const { return p_; }
    const Vec& weights() const { return weights_; }
    bool is_hilbert() const {
        return kind_ == NormKind::euclidean || kind_ == NormKind::weighted_euclidean;
    }

    double norm(const Vec& v) const;
    double dual_norm(const Covector& phi) const;

    // R: H -> H*, defined only on Hilbert kinds.
    Covector riesz(const Vec& v) const;

    // Constructive Hahn-Banach: z with norm(z) = target_norm and
    // pairing(phi, z) = dual_norm(phi) * target_norm (closed form per
    // norm kind, exact up to rounding).
    Vec norming_vector(const Covector& phi, double target_norm) const;

    // norm(a+b)^2 + norm(a-b)^2 - 2 norm(a)^2 - 2 norm(b)^2; zero on
    // inner-product norms, generically nonzero otherwise.
    double parallelogram_defect(const Vec& a, const Vec& b) const;

private:
    NormedSpace(int dim, NormKind kind) : dim_(dim), kind_(kind) {}

    int dim_;
    NormKind kind_;
    double p_ = 2.0;
    Vec weights_;
};

} // namespace bh
