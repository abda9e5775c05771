#pragma once

// Internal rational-polynomial helpers shared by the root isolation and
// oracle translation units. Not installed.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "tailspec/int_poly.hpp"

namespace tailspec::detail {

// dense polynomial over Q, index = power, no trailing zeros
using RatPoly = std::vector<mpq_class>;

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rp_from(const IntPoly& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

inline int rp_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly out(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i)
        out[i - 1] = p[i] * mpq_class(static_cast<long>(i));
    return out;
}

inline mpq_class rp_eval(const RatPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    acc.canonicalize();
    return acc;
}

// remainder of a by b (Euclidean division over Q)
inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw std::invalid_argument("rp_rem: division by zero poly");
    while (rp_deg(a) >= rp_deg(b)) {
        mpq_class q = a.back() / b.back();
        int shift = rp_deg(a) - rp_deg(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();  // leading term cancels by construction
        rp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline RatPoly rp_div_exact(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw std::invalid_argument("rp_div_exact: zero divisor");
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (rp_deg(a) >= rp_deg(b)) {
        mpq_class f = a.back() / b.back();
        int shift = rp_deg(a) - rp_deg(b);
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        rp_trim(a);
    }
    if (!a.empty()) throw std::invalid_argument("rp_div_exact: nonzero remainder");
    rp_trim(q);
    return q;
}

inline RatPoly rp_monic(RatPoly p) {
    if (p.empty()) return p;
    mpq_class lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(std::move(a));
}

// clears denominators and divides by the integer content; keeps the sign
inline IntPoly rp_to_primitive_int(const RatPoly& p) {
    if (p.empty()) return IntPoly();
    mpz_class den = 1;
    for (const auto& c : p) den = lcm(den, c.get_den());
    std::vector<mpz_class> z(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        mpq_class s = p[i] * mpq_class(den);
        s.canonicalize();
        z[i] = s.get_num();
    }
    mpz_class content = 0;
    for (const auto& c : z) content = gcd(content, c);
    if (content > 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return IntPoly(std::move(z));
}

// square-free part p / gcd(p, p')
inline IntPoly squarefree_part(const IntPoly& p) {
    RatPoly a = rp_from(p);
    RatPoly g = rp_gcd(a, rp_derivative(a));
    if (rp_deg(g) < 1) return p;
    return rp_to_primitive_int(rp_div_exact(a, g));
}

// Yun's square-free decomposition: p = prod_i out[i-1]^i up to a constant,
// out[i-1] square-free and pairwise coprime (entries may be constant 1).
inline std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    std::vector<IntPoly> out;
    if (p.degree() < 1) return out;
    RatPoly f = rp_from(p);
    RatPoly fp = rp_derivative(f);
    RatPoly a = rp_gcd(f, fp);
    RatPoly b = rp_div_exact(f, a);
    RatPoly c = rp_div_exact(fp, a);
    // d = c - b'
    RatPoly d = c;
    RatPoly bp = rp_derivative(b);
    if (d.size() < bp.size()) d.resize(bp.size(), mpq_class(0));
    for (size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    rp_trim(d);
    while (rp_deg(b) > 0) {
        RatPoly g = rp_gcd(b, d);
        out.push_back(rp_to_primitive_int(g));
        b = rp_div_exact(b, g);
        RatPoly w = rp_div_exact(d, g);
        bp = rp_derivative(b);
        d = std::move(w);
        if (d.size() < bp.size()) d.resize(bp.size(), mpq_class(0));
        for (size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
        rp_trim(d);
    }
    return out;
}

}  // namespace tailspec::detail
