#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "conic/rational.hpp"

namespace conic {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[k] is the coefficient of x^k; trailing zeros are always trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    template <typename Int>
    static IntPolynomial from(const std::vector<Int>& coeffs) {
        std::vector<Integer> c;
        c.reserve(coeffs.size());
        for (const auto& x : coeffs) c.emplace_back(x);
        return IntPolynomial(std::move(c));
    }

    static IntPolynomial constant(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c)}); }

    static IntPolynomial monomial(Integer c, std::size_t degree) {
        std::vector<Integer> v(degree + 1, Integer(0));
        v[degree] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    /// x + c
    static IntPolynomial linear(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c), Integer(1)}); }

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

    Integer evaluate(const Integer& x) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(q(x))
    IntPolynomial compose(const IntPolynomial& q) const {
        IntPolynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
        return acc;
    }

    IntPolynomial pow(unsigned e) const {
        IntPolynomial result = constant(1);
        IntPolynomial base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Ascending-degree rendering, e.g. "16 + 28x + 14x^2 + x^3".
    std::string to_string(const std::string& var = "x") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Integer& c = coeffs_[k];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (out.empty()) out += (c < 0 ? "-" : "");
            else out += (c < 0 ? " - " : " + ");
            if (k == 0 || mag != 1) out += mag.str();
            if (k >= 1) out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

}  // namespace conic
