#include "tailspec/int_poly.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tailspec {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    canonicalize();
}

IntPoly IntPoly::constant(const mpz_class& c) {
    return IntPoly(std::vector<mpz_class>{c});
}

IntPoly IntPoly::monomial(const mpz_class& c, int power) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<mpz_class> v(power + 1, kZero);
    v[power] = c;
    return IntPoly(std::move(v));
}

void IntPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading: zero polynomial");
    return coeffs_.back();
}

const mpz_class& IntPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[power];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> out(coeffs_);
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const mpz_class& s) const {
    std::vector<mpz_class> out(coeffs_);
    for (auto& c : out) c *= s;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<mpz_class> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * mpz_class(static_cast<long>(i));
    return IntPoly(std::move(out));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += mpq_class(*it);
    }
    acc.canonicalize();
    return acc;
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

int IntPoly::trailing_zero_power() const {
    if (is_zero()) return 0;
    int m = 0;
    while (coeffs_[m] == 0) ++m;
    return m;
}

IntPoly IntPoly::shifted_down(int m) const {
    if (m == 0) return *this;
    if (m < 0 || m > trailing_zero_power())
        throw std::invalid_argument("shifted_down: x^m does not divide");
    return IntPoly(std::vector<mpz_class>(coeffs_.begin() + m, coeffs_.end()));
}

IntPoly IntPoly::deflate_root(const mpq_class& r) const {
    // synthetic division by (x - r) over the rationals; the result is the
    // quotient times a positive integer (denominators cleared), which has
    // exactly the remaining roots
    if (degree() < 1) throw std::invalid_argument("deflate_root: degree < 1");
    std::vector<mpq_class> q(coeffs_.size() - 1);
    mpq_class carry = coeffs_.back();
    for (int i = degree() - 1; i >= 0; --i) {
        q[i] = carry;
        carry = carry * r + coeffs_[i];
    }
    if (carry != 0) throw std::invalid_argument("deflate_root: not a root");
    mpz_class den = 1;
    for (auto& c : q) {
        c.canonicalize();
        den = lcm(den, c.get_den());
    }
    std::vector<mpz_class> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        mpq_class scaled = q[i] * mpq_class(den);
        scaled.canonicalize();
        out[i] = scaled.get_num();
    }
    return IntPoly(std::move(out));
}

double IntPoly::coeff_norm_l1() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::abs(c.get_d());
    return s;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        mpz_class a = abs(c);
        if (a != 1 || k == 0) out += a.get_str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace tailspec
