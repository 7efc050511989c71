#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qfib/cyclotomic.hpp"

namespace qfib {

struct Trunc {
    int n1 = 0;
    int n2 = 0;
    friend Trunc min(const Trunc& a, const Trunc& b) { return {std::min(a.n1, b.n1), std::min(a.n2, b.n2)}; }
    friend bool operator==(const Trunc& a, const Trunc& b) { return a.n1 == b.n1 && a.n2 == b.n2; }
};

// Orders combine only when one divides the other (embedding direction is forced).
inline int combine_orders(int a, int b) {
    if (a == b) return a;
    if (a % b == 0) return a;
    if (b % a == 0) return b;
    throw std::invalid_argument("combine_orders: incompatible zeta orders " + std::to_string(a) + " and " +
                                std::to_string(b));
}

class UniSeries;

// Truncated power series in q1, q2 over Q(zeta_N). Coefficients are tracked on the
// full rectangle 0..n1 x 0..n2; binary operations truncate to the componentwise min.
class BiSeries {
  public:
    BiSeries(int order, Trunc trunc) : order_(order), trunc_(trunc) {}

    static BiSeries constant(const Cyclo& value, int order, Trunc trunc) {
        BiSeries s(order, trunc);
        s.set(0, 0, value.order() == order ? value : value.embedded(order));
        return s;
    }
    static BiSeries zero(int order, Trunc trunc) { return BiSeries(order, trunc); }
    static BiSeries one(int order, Trunc trunc) { return constant(Cyclo::one(order), order, trunc); }
    static BiSeries monomial(const Cyclo& value, int d1, int d2, int order, Trunc trunc) {
        BiSeries s(order, trunc);
        s.set(d1, d2, value.order() == order ? value : value.embedded(order));
        return s;
    }

    int order() const { return order_; }
    const Trunc& trunc() const { return trunc_; }
    const std::map<std::pair<int, int>, Cyclo>& terms() const { return terms_; }

    Cyclo coefficient(int d1, int d2) const {
        auto it = terms_.find({d1, d2});
        return it == terms_.end() ? Cyclo::zero(order_) : it->second;
    }

    void set(int d1, int d2, const Cyclo& value) {
        if (d1 < 0 || d2 < 0) throw std::invalid_argument("BiSeries::set: negative exponent");
        if (d1 > trunc_.n1 || d2 > trunc_.n2) return;
        if (value.is_zero())
            terms_.erase({d1, d2});
        else
            terms_[{d1, d2}] = value.order() == order_ ? value : value.embedded(order_);
    }

    void add_to(int d1, int d2, const Cyclo& value) { set(d1, d2, coefficient(d1, d2) + value); }

    bool is_zero() const { return terms_.empty(); }

    BiSeries truncated(Trunc t) const {
        BiSeries r(order_, min(trunc_, t));
        for (const auto& [k, v] : terms_)
            if (k.first <= r.trunc_.n1 && k.second <= r.trunc_.n2) r.terms_.emplace(k, v);
        return r;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r(combine_orders(a.order_, b.order_), min(a.trunc_, b.trunc_));
        for (const auto& [k, v] : a.terms_) r.add_to(k.first, k.second, v);
        for (const auto& [k, v] : b.terms_) r.add_to(k.first, k.second, v);
        return r;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        BiSeries r(combine_orders(a.order_, b.order_), min(a.trunc_, b.trunc_));
        for (const auto& [k, v] : a.terms_) r.add_to(k.first, k.second, v);
        for (const auto& [k, v] : b.terms_) r.add_to(k.first, k.second, -v);
        return r;
    }
    BiSeries operator-() const {
        BiSeries r(order_, trunc_);
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
        return r;
    }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        BiSeries r(combine_orders(a.order_, b.order_), min(a.trunc_, b.trunc_));
        for (const auto& [ka, va] : a.terms_) {
            if (ka.first > r.trunc_.n1 || ka.second > r.trunc_.n2) continue;
            for (const auto& [kb, vb] : b.terms_) {
                int d1 = ka.first + kb.first, d2 = ka.second + kb.second;
                if (d1 > r.trunc_.n1 || d2 > r.trunc_.n2) continue;
                r.add_to(d1, d2, va * vb);
            }
        }
        return r;
    }
    friend BiSeries operator*(const BiSeries& a, const Cyclo& s) {
        BiSeries r(combine_orders(a.order_, s.order()), a.trunc_);
        for (const auto& [k, v] : a.terms_) r.add_to(k.first, k.second, v * s);
        return r;
    }
    friend BiSeries operator*(const Cyclo& s, const BiSeries& a) { return a * s; }

    BiSeries& operator+=(const BiSeries& b) { return *this = *this + b; }
    BiSeries& operator-=(const BiSeries& b) { return *this = *this - b; }
    BiSeries& operator*=(const BiSeries& b) { return *this = *this * b; }

    // Equality of the developed coefficients on the common truncation rectangle.
    friend bool operator==(const BiSeries& a, const BiSeries& b) { return (a - b).is_zero(); }
    friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

    // Lex-first exponent where the two series differ on the common rectangle.
    friend std::optional<std::pair<int, int>> first_mismatch(const BiSeries& a, const BiSeries& b) {
        BiSeries d = a - b;
        if (d.terms_.empty()) return std::nullopt;
        return d.terms_.begin()->first;
    }

    // Euler derivative D_i = q_i d/dq_i.
    BiSeries euler_derivative(int axis) const {
        if (axis != 1 && axis != 2) throw std::invalid_argument("euler_derivative: axis must be 1 or 2");
        BiSeries r(order_, trunc_);
        for (const auto& [k, v] : terms_) {
            long d = axis == 1 ? k.first : k.second;
            if (d != 0) r.terms_.emplace(k, v * mpq_class(d));
        }
        return r;
    }

    BiSeries pow_int(long e) const {
        if (e < 0) return invert_unit().pow_int(-e);
        BiSeries result = one(order_, trunc_);
        BiSeries base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    // Newton iteration; requires an invertible constant term.
    BiSeries invert_unit() const {
        Cyclo c0 = coefficient(0, 0);
        if (c0.is_zero()) throw std::domain_error("invert_unit: constant term is zero");
        BiSeries x = constant(c0.inverse(), order_, trunc_);
        BiSeries two = constant(Cyclo::integer(2, order_), order_, trunc_);
        for (int guard = 0;; ++guard) {
            BiSeries next = x * (two - *this * x);
            if (next == x) return next;
            x = next;
            if (guard > 64) throw std::logic_error("invert_unit: no convergence");
        }
    }

    // Newton iteration for an n-th root with prescribed constant term `branch`
    // (branch^n must equal the constant term of the series).
    BiSeries nth_root(long n, const Cyclo& branch) const {
        if (n <= 0) throw std::invalid_argument("nth_root: n must be positive");
        Cyclo b = branch.order() == order_ ? branch : branch.embedded(order_);
        if (b.pow(n) != coefficient(0, 0)) throw std::domain_error("nth_root: branch constant does not match");
        if (b.is_zero()) throw std::domain_error("nth_root: zero constant term");
        BiSeries x = constant(b, order_, trunc_);
        Cyclo ninv = Cyclo::integer(n, order_).inverse();
        for (int guard = 0;; ++guard) {
            BiSeries step = (*this - x.pow_int(n)) * x.pow_int(n - 1).invert_unit() * ninv;
            if (step.is_zero()) return x;
            x += step;
            if (guard > 64) throw std::logic_error("nth_root: no convergence");
        }
    }

    // exp of a series with zero constant term.
    BiSeries exp_() const {
        if (!coefficient(0, 0).is_zero()) throw std::domain_error("exp_: constant term must vanish");
        BiSeries result = one(order_, trunc_);
        BiSeries power = one(order_, trunc_);
        mpz_class kfact = 1;
        int kmax = trunc_.n1 + trunc_.n2;
        for (int k = 1; k <= kmax; ++k) {
            power *= *this;
            if (power.is_zero()) break;
            kfact *= k;
            result += power * Cyclo(mpq_class(mpz_class(1), kfact), order_);
        }
        return result;
    }

    // log of a series with constant term 1.
    BiSeries log_() const {
        if (coefficient(0, 0) != Cyclo::one(order_)) throw std::domain_error("log_: constant term must be 1");
        BiSeries u = *this - one(order_, trunc_);
        BiSeries result = zero(order_, trunc_);
        BiSeries power = one(order_, trunc_);
        int kmax = trunc_.n1 + trunc_.n2;
        for (int k = 1; k <= kmax; ++k) {
            power *= u;
            if (power.is_zero()) break;
            result += power * Cyclo::rational(k % 2 ? 1 : -1, k, order_);
        }
        return result;
    }

    UniSeries slice_q2(int k) const;  // coefficient of q2^k as a series in q1
    UniSeries slice_q1(int k) const;  // coefficient of q1^k as a series in q2

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + v.literal() + ")*q1^" + std::to_string(k.first) + "*q2^" + std::to_string(k.second);
        }
        return out;
    }

  private:
    int order_;
    Trunc trunc_;
    std::map<std::pair<int, int>, Cyclo> terms_;
};

// Truncated power series in a single variable (q1 or q2, tagged) over Q(zeta_N).
class UniSeries {
  public:
    UniSeries(int order, int trunc, int var = 1) : order_(order), trunc_(trunc), var_(var) {
        if (var != 1 && var != 2) throw std::invalid_argument("UniSeries: var must be 1 or 2");
    }

    static UniSeries constant(const Cyclo& value, int order, int trunc, int var = 1) {
        UniSeries s(order, trunc, var);
        s.set(0, value);
        return s;
    }
    static UniSeries zero(int order, int trunc, int var = 1) { return UniSeries(order, trunc, var); }
    static UniSeries one(int order, int trunc, int var = 1) {
        return constant(Cyclo::one(order), order, trunc, var);
    }
    static UniSeries monomial(const Cyclo& value, int d, int order, int trunc, int var = 1) {
        UniSeries s(order, trunc, var);
        s.set(d, value);
        return s;
    }

    int order() const { return order_; }
    int trunc() const { return trunc_; }
    int var() const { return var_; }
    const std::map<int, Cyclo>& terms() const { return terms_; }

    Cyclo coefficient(int d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? Cyclo::zero(order_) : it->second;
    }
    void set(int d, const Cyclo& value) {
        if (d < 0) throw std::invalid_argument("UniSeries::set: negative exponent");
        if (d > trunc_) return;
        if (value.is_zero())
            terms_.erase(d);
        else
            terms_[d] = value.order() == order_ ? value : value.embedded(order_);
    }
    void add_to(int d, const Cyclo& value) { set(d, coefficient(d) + value); }
    bool is_zero() const { return terms_.empty(); }

    UniSeries truncated(int t) const {
        UniSeries r(order_, std::min(trunc_, t), var_);
        for (const auto& [k, v] : terms_)
            if (k <= r.trunc_) r.terms_.emplace(k, v);
        return r;
    }

    // The bivariate view: this series in its own variable, constant in the other.
    BiSeries lifted(Trunc t) const {
        BiSeries r(order_, t);
        for (const auto& [k, v] : terms_) {
            if (var_ == 1)
                r.set(k, 0, v);
            else
                r.set(0, k, v);
        }
        return r;
    }

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b) {
        a.check_var_(b);
        UniSeries r(combine_orders(a.order_, b.order_), std::min(a.trunc_, b.trunc_), a.var_);
        for (const auto& [k, v] : a.terms_) r.add_to(k, v);
        for (const auto& [k, v] : b.terms_) r.add_to(k, v);
        return r;
    }
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b) {
        a.check_var_(b);
        UniSeries r(combine_orders(a.order_, b.order_), std::min(a.trunc_, b.trunc_), a.var_);
        for (const auto& [k, v] : a.terms_) r.add_to(k, v);
        for (const auto& [k, v] : b.terms_) r.add_to(k, -v);
        return r;
    }
    UniSeries operator-() const {
        UniSeries r(order_, trunc_, var_);
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
        return r;
    }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
        a.check_var_(b);
        UniSeries r(combine_orders(a.order_, b.order_), std::min(a.trunc_, b.trunc_), a.var_);
        for (const auto& [ka, va] : a.terms_) {
            if (ka > r.trunc_) continue;
            for (const auto& [kb, vb] : b.terms_) {
                if (ka + kb > r.trunc_) break;
                r.add_to(ka + kb, va * vb);
            }
        }
        return r;
    }
    friend UniSeries operator*(const UniSeries& a, const Cyclo& s) {
        UniSeries r(combine_orders(a.order_, s.order()), a.trunc_, a.var_);
        for (const auto& [k, v] : a.terms_) r.add_to(k, v * s);
        return r;
    }
    friend UniSeries operator*(const Cyclo& s, const UniSeries& a) { return a * s; }

    UniSeries& operator+=(const UniSeries& b) { return *this = *this + b; }
    UniSeries& operator-=(const UniSeries& b) { return *this = *this - b; }
    UniSeries& operator*=(const UniSeries& b) { return *this = *this * b; }

    friend bool operator==(const UniSeries& a, const UniSeries& b) { return (a - b).is_zero(); }
    friend bool operator!=(const UniSeries& a, const UniSeries& b) { return !(a == b); }

    friend std::optional<int> first_mismatch(const UniSeries& a, const UniSeries& b) {
        UniSeries d = a - b;
        if (d.terms_.empty()) return std::nullopt;
        return d.terms_.begin()->first;
    }

    // Euler derivative D = q d/dq.
    UniSeries euler_derivative() const {
        UniSeries r(order_, trunc_, var_);
        for (const auto& [k, v] : terms_)
            if (k != 0) r.terms_.emplace(k, v * mpq_class(k));
        return r;
    }

    UniSeries pow_int(long e) const {
        if (e < 0) return invert_unit().pow_int(-e);
        UniSeries result = one(order_, trunc_, var_);
        UniSeries base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    UniSeries invert_unit() const {
        Cyclo c0 = coefficient(0);
        if (c0.is_zero()) throw std::domain_error("invert_unit: constant term is zero");
        UniSeries x = constant(c0.inverse(), order_, trunc_, var_);
        UniSeries two = constant(Cyclo::integer(2, order_), order_, trunc_, var_);
        for (int guard = 0;; ++guard) {
            UniSeries next = x * (two - *this * x);
            if (next == x) return next;
            x = next;
            if (guard > 64) throw std::logic_error("invert_unit: no convergence");
        }
    }

    UniSeries nth_root(long n, const Cyclo& branch) const {
        if (n <= 0) throw std::invalid_argument("nth_root: n must be positive");
        Cyclo b = branch.order() == order_ ? branch : branch.embedded(order_);
        if (b.pow(n) != coefficient(0)) throw std::domain_error("nth_root: branch constant does not match");
        if (b.is_zero()) throw std::domain_error("nth_root: zero constant term");
        UniSeries x = constant(b, order_, trunc_, var_);
        Cyclo ninv = Cyclo::integer(n, order_).inverse();
        for (int guard = 0;; ++guard) {
            UniSeries step = (*this - x.pow_int(n)) * x.pow_int(n - 1).invert_unit() * ninv;
            if (step.is_zero()) return x;
            x += step;
            if (guard > 64) throw std::logic_error("nth_root: no convergence");
        }
    }

    UniSeries exp_() const {
        if (!coefficient(0).is_zero()) throw std::domain_error("exp_: constant term must vanish");
        UniSeries result = one(order_, trunc_, var_);
        UniSeries power = one(order_, trunc_, var_);
        mpz_class kfact = 1;
        for (int k = 1; k <= trunc_; ++k) {
            power *= *this;
            if (power.is_zero()) break;
            kfact *= k;
            result += power * Cyclo(mpq_class(mpz_class(1), kfact), order_);
        }
        return result;
    }

    UniSeries log_() const {
        if (coefficient(0) != Cyclo::one(order_)) throw std::domain_error("log_: constant term must be 1");
        UniSeries u = *this - one(order_, trunc_, var_);
        UniSeries result = zero(order_, trunc_, var_);
        UniSeries power = one(order_, trunc_, var_);
        for (int k = 1; k <= trunc_; ++k) {
            power *= u;
            if (power.is_zero()) break;
            result += power * Cyclo::rational(k % 2 ? 1 : -1, k, order_);
        }
        return result;
    }

    // Composition this(inner) for univariate inner with zero constant term.
    UniSeries substitute(const UniSeries& inner) const {
        if (!inner.coefficient(0).is_zero()) throw std::domain_error("substitute: inner constant term must vanish");
        UniSeries result = zero(combine_orders(order_, inner.order_), inner.trunc_, inner.var_);
        for (int k = trunc_; k >= 0; --k) {
            result *= inner;
            Cyclo c = coefficient(k);
            if (!c.is_zero()) result.add_to(0, c);
        }
        return result;
    }

    // Compositional inverse: returns g with this(g) = id; requires a_0 = 0, a_1 invertible.
    UniSeries reversion() const {
        if (!coefficient(0).is_zero()) throw std::domain_error("reversion: constant term must vanish");
        Cyclo a1 = coefficient(1);
        if (a1.is_zero()) throw std::domain_error("reversion: linear coefficient must be invertible");
        Cyclo a1inv = a1.inverse();
        UniSeries g = monomial(a1inv, 1, order_, trunc_, var_);
        for (int k = 2; k <= trunc_; ++k) {
            UniSeries err = substitute(g);
            err.add_to(1, -Cyclo::one(order_));
            g.add_to(k, -(err.coefficient(k) * a1inv));
        }
        return g;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        std::string q = var_ == 1 ? "q1" : "q2";
        for (const auto& [k, v] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + v.literal() + ")*" + q + "^" + std::to_string(k);
        }
        return out;
    }

  private:
    void check_var_(const UniSeries& b) const {
        if (var_ != b.var_) throw std::invalid_argument("UniSeries: mixed variables");
    }

    int order_;
    int trunc_;
    int var_;
    std::map<int, Cyclo> terms_;
};

inline UniSeries BiSeries::slice_q2(int k) const {
    UniSeries r(order_, trunc_.n1, 1);
    for (const auto& [key, v] : terms_)
        if (key.second == k) r.set(key.first, v);
    return r;
}

inline UniSeries BiSeries::slice_q1(int k) const {
    UniSeries r(order_, trunc_.n2, 2);
    for (const auto& [key, v] : terms_)
        if (key.first == k) r.set(key.second, v);
    return r;
}

// Composition a(b) for univariate a and bivariate b with zero constant term.
inline BiSeries substitute(const UniSeries& a, const BiSeries& b) {
    if (!b.coefficient(0, 0).is_zero()) throw std::domain_error("substitute: inner constant term must vanish");
    BiSeries result = BiSeries::zero(combine_orders(a.order(), b.order()), b.trunc());
    for (int k = a.trunc(); k >= 0; --k) {
        result *= b;
        Cyclo c = a.coefficient(k);
        if (!c.is_zero()) result.add_to(0, 0, c);
    }
    return result;
}

}  // namespace qfib
