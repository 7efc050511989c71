#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfib {

inline int euler_phi(int n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Exact division of polynomials over Z; both ascending, divisor monic.
inline std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                             const std::vector<mpz_class>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        mpz_class c = num[k + dd];
        quot[k] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (int i = 0; i < dd; ++i)
        if (num[i] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

}  // namespace detail

// Phi_n, monic over Z, ascending coefficients, size euler_phi(n)+1.
inline const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<mpz_class>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> poly;
    if (n == 1) {
        poly = {-1, 1};
    } else {
        poly.assign(n + 1, 0);
        poly[0] = -1;
        poly[n] = 1;  // x^n - 1
        for (int d = 1; d < n; ++d)
            if (n % d == 0) poly = detail::poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

// Element of Q(zeta_N) in the power basis 1, w, ..., w^{phi(N)-1} with w = zeta_N,
// reduced modulo Phi_N. Orders are combined by embedding when one divides the other.
class Cyclo {
  public:
    Cyclo() : order_(1), c_(1, mpq_class(0)) {}

    explicit Cyclo(const mpq_class& r, int order = 1) : order_(order), c_(euler_phi(order), mpq_class(0)) {
        c_[0] = r;
        canonicalize_();
    }

    static Cyclo zero(int order) { return Cyclo(mpq_class(0), order); }
    static Cyclo one(int order) { return Cyclo(mpq_class(1), order); }
    static Cyclo integer(long v, int order = 1) { return Cyclo(mpq_class(v), order); }
    static Cyclo rational(long num, long den, int order = 1) {
        mpq_class r(num, den);
        r.canonicalize();
        return Cyclo(r, order);
    }

    // zeta_order^k
    static Cyclo root_of_unity(int order, long k) {
        k %= order;
        if (k < 0) k += order;
        std::vector<mpq_class> poly(static_cast<size_t>(k) + 1, mpq_class(0));
        poly[static_cast<size_t>(k)] = 1;
        return Cyclo(order, reduce_(std::move(poly), order));
    }

    int order() const { return order_; }
    const std::vector<mpq_class>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    // Requires is_rational().
    mpq_class rational_part() const {
        if (!is_rational()) throw std::domain_error("Cyclo: not a rational element");
        return c_[0];
    }

    // Image under zeta_N -> zeta_M^{M/N}; requires order() | new_order.
    Cyclo embedded(int new_order) const {
        if (new_order == order_) return *this;
        if (new_order % order_ != 0) throw std::invalid_argument("Cyclo::embedded: order must divide target");
        const int step = new_order / order_;
        std::vector<mpq_class> poly(static_cast<size_t>((c_.size() - 1) * step) + 1, mpq_class(0));
        for (size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
        return Cyclo(new_order, reduce_(std::move(poly), new_order));
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = aligned_(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        x.canonicalize_();
        return x;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = aligned_(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        x.canonicalize_();
        return x;
    }
    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = aligned_(a, b);
        const size_t n = x.c_.size();
        std::vector<mpq_class> prod(2 * n - 1, mpq_class(0));
        for (size_t i = 0; i < n; ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y.c_[j] == 0) continue;
                prod[i + j] += x.c_[i] * y.c_[j];
            }
        }
        return Cyclo(x.order_, reduce_(std::move(prod), x.order_));
    }
    friend Cyclo operator*(const Cyclo& a, const mpq_class& s) {
        Cyclo r = a;
        for (auto& x : r.c_) x *= s;
        r.canonicalize_();
        return r;
    }
    friend Cyclo operator*(const mpq_class& s, const Cyclo& a) { return a * s; }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Extended Euclid against Phi_N in Q[x].
    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("Cyclo::inverse: zero element");
        if (is_rational()) return Cyclo(mpq_class(1) / c_[0], order_);
        const auto& phiz = cyclotomic_polynomial(order_);
        std::vector<mpq_class> r0(phiz.begin(), phiz.end());
        std::vector<mpq_class> r1(c_.begin(), c_.end());
        trim_(r1);
        std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};  // coefficients on *this
        while (true) {
            // r0 = q*r1 + r2
            std::vector<mpq_class> rem = r0;
            std::vector<mpq_class> quot(std::max<size_t>(1, rem.size() - r1.size() + 1), mpq_class(0));
            while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
                mpq_class c = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                quot[shift] += c;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                trim_(rem);
                if (rem.size() == 1 && rem[0] == 0) break;
            }
            // s2 = s0 - q*s1
            std::vector<mpq_class> s2 = s0;
            s2.resize(std::max(s0.size(), quot.size() + s1.size() - 1), mpq_class(0));
            for (size_t i = 0; i < quot.size(); ++i) {
                if (quot[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quot[i] * s1[j];
            }
            trim_(s2);
            if (rem.size() == 1 && rem[0] == 0) {
                // r1 is the gcd; must be a nonzero constant since Phi_N is irreducible.
                if (r1.size() != 1) throw std::logic_error("Cyclo::inverse: gcd not constant");
                for (auto& x : s1) x /= r1[0];
                return Cyclo(order_, reduce_(std::move(s1), order_));
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    Cyclo pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclo result = Cyclo::one(order_);
        Cyclo base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    // "p/q*w^k" terms joined by "+"; zero prints as "0/1*w^0".
    std::string literal() const {
        std::string out;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            if (!out.empty()) out += '+';
            out += term_string_(c_[k], k);
        }
        if (out.empty()) out = "0/1*w^0";
        return out;
    }

    static Cyclo parse_literal(const std::string& s, int order) {
        std::vector<mpq_class> poly(euler_phi(order), mpq_class(0));
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find('+', pos);
            if (next == std::string::npos) next = s.size();
            std::string term = s.substr(pos, next - pos);
            size_t star = term.find("*w^");
            if (star == std::string::npos) throw std::invalid_argument("Cyclo literal: missing *w^ in '" + term + "'");
            mpq_class val(term.substr(0, star));
            val.canonicalize();
            int k = std::stoi(term.substr(star + 3));
            if (k < 0 || k >= order) throw std::invalid_argument("Cyclo literal: exponent out of range");
            if (static_cast<size_t>(k) >= poly.size()) poly.resize(static_cast<size_t>(k) + 1, mpq_class(0));
            poly[static_cast<size_t>(k)] += val;
            pos = next + 1;
        }
        return Cyclo(order, reduce_(std::move(poly), order));
    }

    std::string str() const { return literal(); }

  private:
    Cyclo(int order, std::vector<mpq_class> coords) : order_(order), c_(std::move(coords)) {
        c_.resize(euler_phi(order_), mpq_class(0));
        canonicalize_();
    }

    void canonicalize_() {
        for (auto& x : c_) x.canonicalize();
    }

    static void trim_(std::vector<mpq_class>& p) {
        while (p.size() > 1 && p.back() == 0) p.pop_back();
    }

    // Reduce an ascending polynomial in w modulo Phi_N; returns phi(N) coordinates.
    static std::vector<mpq_class> reduce_(std::vector<mpq_class> poly, int order) {
        const auto& phiz = cyclotomic_polynomial(order);
        const size_t deg = phiz.size() - 1;
        for (size_t m = poly.size(); m-- > deg;) {
            mpq_class c = poly[m];
            if (c == 0) continue;
            poly[m] = 0;
            for (size_t i = 0; i < deg; ++i) poly[m - deg + i] -= c * mpq_class(phiz[i]);
        }
        poly.resize(deg, mpq_class(0));
        return poly;
    }

    static std::pair<Cyclo, Cyclo> aligned_(const Cyclo& a, const Cyclo& b) {
        if (a.order_ == b.order_) return {a, b};
        if (b.order_ % a.order_ == 0) return {a.embedded(b.order_), b};
        if (a.order_ % b.order_ == 0) return {a, b.embedded(a.order_)};
        throw std::invalid_argument("Cyclo: incompatible zeta orders " + std::to_string(a.order_) + " and " +
                                    std::to_string(b.order_));
    }

    static std::string term_string_(const mpq_class& v, size_t k) {
        return v.get_num().get_str() + "/" + v.get_den().get_str() + "*w^" + std::to_string(k);
    }

    int order_;
    std::vector<mpq_class> c_;
};

// Header token for text serializations of cyclotomic data.
inline std::string cyclo_header(int order) { return "zeta_order=" + std::to_string(order); }

inline int parse_cyclo_header(const std::string& s) {
    const std::string key = "zeta_order=";
    if (s.rfind(key, 0) != 0) throw std::invalid_argument("expected 'zeta_order=N' header, got '" + s + "'");
    return std::stoi(s.substr(key.size()));
}

}  // namespace qfib
