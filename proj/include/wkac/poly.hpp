#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wkac/rational.hpp"

namespace wkac {

// Sparse exact polynomial in the five symbols used across the library:
//   h : conformal weight        q : charge/current eigenvalue
//   k : affine level            c : central charge
//   g : fermionic zero-mode eigenvalue
// Exponent tuples are compared lexicographically; map iteration order makes
// every printed form and every canonicalization deterministic.
enum Var : int { VH = 0, VQ = 1, VK = 2, VC = 3, VG = 4 };
inline constexpr int kNumVars = 5;
inline constexpr const char* kVarNames[kNumVars] = {"h", "q", "k", "c", "g"};

using Expo = std::array<int, kNumVars>;

class Poly {
  public:
    using TermMap = std::map<Expo, Rat>;

    Poly() = default;
    explicit Poly(const Rat& constant) {
        if (constant != 0) terms_[Expo{}] = constant;
    }
    explicit Poly(long constant) : Poly(Rat(constant)) {}

    static Poly var(Var v, int power = 1) {
        Poly p;
        Expo e{};
        e[v] = power;
        p.terms_[e] = 1;
        return p;
    }
    static Poly term(const Rat& coeff, const Expo& e) {
        Poly p;
        if (coeff != 0) p.terms_[e] = coeff;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("Poly: not a constant");
        return terms_.begin()->second;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e;
                for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    Poly pow(int n) const {
        if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r(1);
        Poly base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    int degree(Var v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }
    bool depends_on(Var v) const {
        for (const auto& [e, c] : terms_)
            if (e[v] != 0) return true;
        return false;
    }

    /// Coefficient polynomial of v^power.
    Poly coeff_of(Var v, int power) const {
        Poly r;
        for (const auto& [e, c] : terms_)
            if (e[v] == power) {
                Expo e2 = e;
                e2[v] = 0;
                r.add_term(e2, c);
            }
        return r;
    }

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<Poly> divide_exact(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("Poly: division by zero");
        Poly r = *this, quo;
        const auto& [de, dc] = *d.terms_.rbegin();
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms_.rbegin();
            Expo e;
            for (int i = 0; i < kNumVars; ++i) {
                e[i] = re[i] - de[i];
                if (e[i] < 0) return std::nullopt;
            }
            Rat cq = rc / dc;
            quo.add_term(e, cq);
            r -= Poly::term(cq, e) * d;
        }
        return quo;
    }

    /// gcd of numerators over lcm of denominators, signed by the lex-leading term.
    Rat content() const {
        if (terms_.empty()) return Rat(0);
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat r(num_gcd, den_lcm);
        r.canonicalize();
        if (terms_.rbegin()->second < 0) r = -r;
        return r;
    }

    /// Content-free form with positive lex-leading coefficient.
    Poly primitive() const {
        if (is_zero()) return *this;
        Rat c = content();
        Poly r = *this;
        for (auto& [e, v] : r.terms_) v /= c;
        return r;
    }

    Poly substitute(Var v, const Poly& value) const {
        Poly r;
        for (const auto& [e, c] : terms_) {
            Expo e2 = e;
            e2[v] = 0;
            Poly t = Poly::term(c, e2);
            if (e[v] > 0) t *= value.pow(e[v]);
            r += t;
        }
        return r;
    }

    /// Substitutes v -> num/den, returning (p_cleared, d) with
    /// p(v=num/den) = p_cleared / den^d.
    std::pair<Poly, int> substitute_fraction(Var v, const Poly& num, const Poly& den) const {
        int d = degree(v);
        Poly r;
        for (const auto& [e, c] : terms_) {
            Expo e2 = e;
            e2[v] = 0;
            r += Poly::term(c, e2) * num.pow(e[v]) * den.pow(d - e[v]);
        }
        return {r, d};
    }

    Rat eval(const std::array<Rat, kNumVars>& point) const {
        Rat total(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < kNumVars; ++i)
                for (int j = 0; j < e[i]; ++j) t *= point[i];
            total += t;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rat a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = e != Expo{};
            if (a != 1 || !has_vars) {
                out << rat_str(a);
                if (has_vars) out << "*";
            }
            bool first_var = true;
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                if (!first_var) out << "*";
                first_var = false;
                out << kVarNames[i];
                if (e[i] > 1) out << "^" << e[i];
            }
        }
        return out.str();
    }

  private:
    void add_term(const Expo& e, const Rat& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline Poly poly_h() { return Poly::var(VH); }
inline Poly poly_q() { return Poly::var(VQ); }
inline Poly poly_k() { return Poly::var(VK); }
inline Poly poly_c() { return Poly::var(VC); }
inline Poly poly_g() { return Poly::var(VG); }

/// Reduces every g^2 to (h - c/24); the fermionic zero mode squares to L_0 - c/24.
inline Poly reduce_zero_mode(const Poly& p) {
    Poly tau = poly_h() - Poly(rat(1, 24)) * poly_c();
    Poly r;
    for (const auto& [e, coeff] : p.terms()) {
        Expo e2 = e;
        e2[VG] = e[VG] % 2;
        r += Poly::term(coeff, e2) * tau.pow(e[VG] / 2);
    }
    return r;
}

/// Univariate gcd in k (primitive, positive leading coefficient).
inline Poly gcd_in_k(Poly a, Poly b) {
    for (const auto& p : {a, b})
        for (const auto& [e, c] : p.terms())
            if (e[VH] || e[VQ] || e[VC] || e[VG])
                throw std::invalid_argument("gcd_in_k: polynomial not univariate in k");
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        int da = a.degree(VK), db = b.degree(VK);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        Rat lb = b.coeff_of(VK, db).constant_value();
        Poly r = a;
        while (!r.is_zero() && r.degree(VK) >= db) {
            int dr = r.degree(VK);
            Rat lr = r.coeff_of(VK, dr).constant_value();
            r -= Poly::term(lr / lb, [&] {
                     Expo e{};
                     e[VK] = dr - db;
                     return e;
                 }()) *
                 b;
        }
        a = b;
        b = r.is_zero() ? r : r.primitive();
    }
    return a.is_zero() ? a : a.primitive();
}

// Rational function of k with exact coefficients, kept in lowest terms with a
// primitive positive-leading denominator.
class RatFunc {
  public:
    RatFunc() : num_(Poly(0)), den_(Poly(1)) {}
    explicit RatFunc(const Rat& r) : num_(Poly(r)), den_(Poly(1)) {}
    explicit RatFunc(const Poly& num) : num_(num), den_(Poly(1)) {}
    RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc k() { return RatFunc(poly_k()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { return RatFunc(Rat(0)) - *this; }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Evaluation at numeric k; throws on a pole.
    Rat eval(const Rat& kval) const {
        std::array<Rat, kNumVars> pt{};
        pt[VK] = kval;
        Rat d = den_.eval(pt);
        if (d == 0) throw std::domain_error("RatFunc: pole at k = " + rat_str(kval));
        return num_.eval(pt) / d;
    }

    std::string str() const {
        if (den_ == Poly(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = gcd_in_k(num_, den_);
        if (g.degree(VK) > 0) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
        Rat c = den_.content();
        Poly d2;
        for (const auto& [e, v] : den_.terms()) d2 += Poly::term(v / c, e);
        den_ = d2;
        Poly n2;
        for (const auto& [e, v] : num_.terms()) n2 += Poly::term(v / c, e);
        num_ = n2;
    }

    Poly num_, den_;
};

}  // namespace wkac
