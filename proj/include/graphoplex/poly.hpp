#pragma once

#include "graphoplex/common.hpp"

#include <string>
#include <vector>

namespace gpx {

/// Polynomial in one formal variable s (standing for 2n) with rational
/// coefficients. Integer-valued pairings use it as an integer polynomial.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (c != 0) c_.push_back(c); } // NOLINT: constant polynomial
    static Poly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational eval(const Rational& s) const;
    bool is_integral() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& k);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// "3*s^2 - s + 1/2"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace gpx
