#ifndef BGRACE_POLYNOMIAL_HPP
#define BGRACE_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bgrace/numeric.hpp"

namespace bgrace {

// Univariate polynomial over the complex numbers, coefficients stored in
// ascending degree order. Trailing (highest-degree) zero coefficients are
// trimmed on construction, so the leading coefficient is nonzero except for
// the zero polynomial, which is stored as the single coefficient 0.
class complex_polynomial {
public:
    complex_polynomial() : coeffs_{cplx(0.0)} {}

    explicit complex_polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(cplx(0.0));
        for (const cplx& c : coeffs_) require_finite(c, "polynomial coefficient");
        while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
    }

    // Monic polynomial with the given roots; the empty set yields the
    // constant polynomial 1.
    static complex_polynomial from_roots(std::span<const cplx> roots) {
        for (const cplx& r : roots) require_finite(r, "root");
        std::vector<cplx> c{cplx(1.0)};
        c.reserve(roots.size() + 1);
        for (const cplx& r : roots) {
            c.push_back(cplx(0.0));
            for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
            c[0] = -r * c[0];
        }
        return complex_polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0); }

    const std::vector<cplx>& coefficients() const { return coeffs_; }

    cplx coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : cplx(0.0);
    }

    cplx evaluate(cplx z) const {
        cplx acc = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
        return acc;
    }

    // Value and first derivative in one Horner pass.
    std::pair<cplx, cplx> evaluate_with_derivative(cplx z) const {
        cplx p = coeffs_.back();
        cplx dp = cplx(0.0);
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
            dp = dp * z + p;
            p = p * z + coeffs_[k];
        }
        return {p, dp};
    }

    // Local magnitude scale sum_k |c_k| |z|^k, the natural backward-error
    // yardstick for |p(z)|.
    double magnitude_at(cplx z) const {
        double az = std::abs(z);
        double acc = std::abs(coeffs_.back());
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * az + std::abs(coeffs_[k]);
        return acc;
    }

    complex_polynomial derivative() const {
        if (coeffs_.size() == 1) return complex_polynomial();
        std::vector<cplx> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = double(k) * coeffs_[k];
        return complex_polynomial(std::move(d));
    }

    friend complex_polynomial operator+(const complex_polynomial& p, const complex_polynomial& q) {
        std::vector<cplx> c(std::max(p.coeffs_.size(), q.coeffs_.size()), cplx(0.0));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coefficient(k) + q.coefficient(k);
        return complex_polynomial(std::move(c));
    }

    friend complex_polynomial operator*(cplx s, const complex_polynomial& p) {
        std::vector<cplx> c = p.coeffs_;
        for (cplx& ck : c) ck *= s;
        return complex_polynomial(std::move(c));
    }

    bool operator==(const complex_polynomial& other) const = default;

private:
    std::vector<cplx> coeffs_;
};

}  // namespace bgrace

#endif  // BGRACE_POLYNOMIAL_HPP
