#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tailspec {

/// Dense univariate polynomial with exact arbitrary-precision integer
/// coefficients, index = power. Canonical form: no trailing zero
/// coefficients; the zero polynomial has an empty coefficient vector.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(const mpz_class& c, int power);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const mpz_class& leading() const;
    const mpz_class& coeff(int power) const;  // 0 beyond the stored range
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly&) const;
    IntPoly operator-(const IntPoly&) const;
    IntPoly operator*(const IntPoly&) const;
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    bool operator==(const IntPoly&) const = default;

    IntPoly scaled(const mpz_class& s) const;
    IntPoly derivative() const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    double eval(double x) const;

    /// Largest m with x^m dividing the polynomial (0 for a nonzero
    /// constant term; 0 for the zero polynomial).
    int trailing_zero_power() const;
    /// Divides out x^m.
    IntPoly shifted_down(int m) const;

    /// Exact division by (x - r); requires r to be a root.
    IntPoly deflate_root(const mpq_class& r) const;

    /// Sum of |coefficients| as a double (scale for residual bounds).
    double coeff_norm_l1() const;

    std::string to_string() const;  // human-readable, highest power first

  private:
    void canonicalize();
    std::vector<mpz_class> coeffs_;
};

}  // namespace tailspec
