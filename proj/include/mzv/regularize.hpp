#pragma once

#include <string>
#include <vector>

#include "mzv/lincomb.hpp"
#include "mzv/products.hpp"

namespace mzvkit {

// Polynomial in T with coefficients in H^0: sum_i c_i T^i.
// The zero polynomial is stored as a single zero coefficient.
class RegPolynomial {
public:
    RegPolynomial() : coeffs_(1) {}
    // Trailing zero coefficients are trimmed; throws DomainError if a coefficient leaves H^0.
    explicit RegPolynomial(std::vector<LinComb> coeffs);
    static RegPolynomial constant(LinComb c) { return RegPolynomial(std::vector<LinComb>{std::move(c)}); }
    // c T^n
    static RegPolynomial monomial(LinComb c, unsigned n);

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const LinComb &coefficient(unsigned i) const { return coeffs_.at(i); }
    const std::vector<LinComb> &coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    RegPolynomial &operator+=(const RegPolynomial &rhs);
    RegPolynomial &operator-=(const RegPolynomial &rhs);
    RegPolynomial &operator*=(const Rational &c);
    friend RegPolynomial operator+(RegPolynomial a, const RegPolynomial &b) { return a += b; }
    friend RegPolynomial operator-(RegPolynomial a, const RegPolynomial &b) { return a -= b; }
    friend RegPolynomial operator*(RegPolynomial a, const Rational &c) { return a *= c; }

    bool operator==(const RegPolynomial &) const = default;

    // [[i, <LinComb>], ...] ascending in i.
    std::string serialize() const;
    std::string pretty() const;

private:
    void trim();
    std::vector<LinComb> coeffs_;
};

// Product in H^0[T] where coefficients multiply with the given Hoffman product.
RegPolynomial multiply(Product kind, const RegPolynomial &p, const RegPolynomial &q);

// The isomorphisms H^1 -> H^0[T] for each product (e1 -> T).
RegPolynomial decompose(Product kind, const LinComb &x);
RegPolynomial star_decompose(const LinComb &x);
RegPolynomial shuffle_decompose(const LinComb &x);

// Inverse map: T -> e1, powers and coefficient products taken in the given product.
LinComb substitute_e1(Product kind, const RegPolynomial &p);

// Constant coefficient of the decomposition (T -> 0).
LinComb reg_star(const LinComb &x);
LinComb reg_sh(const LinComb &x);
LinComb regularize(Product kind, const LinComb &x);

RegPolynomial z_star_polynomial(const Index &k);
RegPolynomial z_sh_polynomial(const Index &k);

namespace detail {
void clear_decompose_caches();
}

} // namespace mzvkit
