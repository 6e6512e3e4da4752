#pragma once

#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "wkac/twist.hpp"

namespace wkac {

// One positive root of the W-algebra in a given sector: charge in q-units,
// L_0 level, parity and multiplicity.
struct WRoot {
    Rat charge;
    Rat level;
    bool odd = false;
    int mult = 1;

    bool operator<(const WRoot& o) const {
        return std::tie(level, charge, odd) < std::tie(o.level, o.charge, o.odd);
    }
    bool operator==(const WRoot& o) const {
        return charge == o.charge && level == o.level && odd == o.odd && mult == o.mult;
    }
};

struct Eta {
    Rat charge;
    Rat level;
    bool operator<(const Eta& o) const {
        return std::tie(level, charge) < std::tie(o.level, o.charge);
    }
    bool operator==(const Eta& o) const { return charge == o.charge && level == o.level; }
};

inline int default_max_level() {
    if (const char* env = std::getenv("WKAC_MAX_LEVEL")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 6;
}

// Sector root multiset truncated at a level cutoff. Imaginary roots (0, m)
// enter with multiplicity rank; grade-0 roots sit at integer-shifted levels from
// 0 (positive side) or above 0 (negative side); grade-1/2 roots at eps+1/2+Z.
inline std::vector<WRoot> positive_w_roots(const AlgebraData& A, const TwistAssignment& t,
                                           const Rat& cutoff) {
    GradationData G = minimal_gradation(A);
    std::vector<WRoot> raw;
    auto push_lattice = [&](const Rat& charge, bool odd, const Rat& base, bool include_zero) {
        Rat start = base;
        if (start == 0 && !include_zero) start = 1;
        for (Rat m = start; m <= cutoff; m += 1) raw.push_back({charge, m, odd, 1});
    };

    for (Rat m(1); m <= cutoff; m += 1) raw.push_back({Rat(0), m, false, A.rank});

    for (int i : G.delta0_plus) {
        const auto& r = A.positive_roots[i];
        push_lattice(A.charge(r), r.odd, mod1(t.eps[i]), true);
        push_lattice(-A.charge(r), r.odd, mod1(-t.eps[i]), false);
    }
    for (int i : G.delta_half) {
        const auto& r = A.positive_roots[i];
        bool plus = std::find(G.delta_half_plus.begin(), G.delta_half_plus.end(), i) !=
                    G.delta_half_plus.end();
        push_lattice(A.charge(r), r.odd, mod1(t.eps[i] + rat(1, 2)), plus);
    }

    // merge equal (charge, level, parity) rows into multiplicities
    std::sort(raw.begin(), raw.end());
    std::vector<WRoot> out;
    for (const auto& r : raw) {
        if (!out.empty() && out.back().level == r.level && out.back().charge == r.charge &&
            out.back().odd == r.odd)
            out.back().mult += r.mult;
        else
            out.push_back(r);
    }
    for (const auto& r : out)
        if (r.level == 0 && !(r.charge > 0))
            throw std::logic_error(A.name + ": level-0 root with nonpositive charge");
    return out;
}

// Truncated bivariate series with rational exponents on a fixed denominator
// lattice: charge exponents in (1/cd)Z, level exponents in (1/ld)Z >= 0.
class GradedSeries {
  public:
    GradedSeries(long charge_denom, long level_denom, long max_level_units,
                 long charge_window_units)
        : cd_(charge_denom), ld_(level_denom), max_lu_(max_level_units),
          win_(charge_window_units) {
        coeffs_[{0, 0}] = 1;
    }

    long charge_denom() const { return cd_; }
    long level_denom() const { return ld_; }

    std::optional<std::pair<long, long>> key_of(const Eta& e) const {
        Rat cu = e.charge * cd_, lu = e.level * ld_;
        if (!is_integer(cu) || !is_integer(lu)) return std::nullopt;
        if (!cu.get_num().fits_slong_p() || !lu.get_num().fits_slong_p())
            return std::nullopt;
        return std::make_pair(lu.get_num().get_si(), cu.get_num().get_si());
    }

    Int coefficient(const Eta& e) const {
        auto k = key_of(e);
        if (!k) return 0;
        auto it = coeffs_.find(*k);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    /// multiplies by (1 + x^charge y^level)^mult (odd root factor)
    void mul_odd(const Rat& charge, const Rat& level, int mult) {
        auto t = step(charge, level);
        for (int rep = 0; rep < mult; ++rep) {
            std::map<std::pair<long, long>, Int> out = coeffs_;
            for (const auto& [key, v] : coeffs_) {
                auto shifted = shift(key, t);
                if (shifted) out[*shifted] += v;
            }
            prune(out);
            coeffs_ = std::move(out);
        }
    }

    /// multiplies by (1 - x^charge y^level)^(-mult) (even root factor)
    void mul_even(const Rat& charge, const Rat& level, int mult) {
        auto t = step(charge, level);
        for (int rep = 0; rep < mult; ++rep) {
            // ascending accumulation: s[e + t] += s[e]
            for (auto it = coeffs_.begin(); it != coeffs_.end(); ++it) {
                auto shifted = shift(it->first, t);
                if (shifted) coeffs_[*shifted] += it->second;
            }
            prune(coeffs_);
        }
    }

    /// divides by one factor (1 + x^charge y^level): partitions excluding the root
    void div_odd_once(const Rat& charge, const Rat& level) {
        auto t = step(charge, level);
        for (auto it = coeffs_.begin(); it != coeffs_.end(); ++it) {
            auto shifted = shift(it->first, t);
            if (shifted) coeffs_[*shifted] -= it->second;
        }
        prune(coeffs_);
    }

    const std::map<std::pair<long, long>, Int>& coefficients() const { return coeffs_; }

  private:
    std::pair<long, long> step(const Rat& charge, const Rat& level) const {
        Rat cu = charge * cd_, lu = level * ld_;
        if (!is_integer(cu) || !is_integer(lu))
            throw std::invalid_argument("series: exponent outside denominator lattice");
        if (lu < 0 || (lu == 0 && cu <= 0))
            throw std::invalid_argument("series: factor must raise the grading");
        return {lu.get_num().get_si(), cu.get_num().get_si()};
    }
    std::optional<std::pair<long, long>> shift(const std::pair<long, long>& key,
                                               const std::pair<long, long>& t) const {
        long lu = key.first + t.first, cu = key.second + t.second;
        if (lu > max_lu_ || cu > win_ || cu < -win_) return std::nullopt;
        return std::make_pair(lu, cu);
    }
    void prune(std::map<std::pair<long, long>, Int>& m) const {
        for (auto it = m.begin(); it != m.end();)
            it = (it->second == 0) ? m.erase(it) : std::next(it);
    }

    long cd_, ld_, max_lu_, win_;
    std::map<std::pair<long, long>, Int> coeffs_;
};

namespace detail {
inline long lcm_den(long acc, const Rat& r) {
    return std::lcm(acc, to_long(Int(r.get_den())));
}
}  // namespace detail

// Partition counts for one algebra/sector pair: series-based primary path plus
// an independent enumerative path used as a cross-check.
class PartitionTable {
  public:
    PartitionTable(const AlgebraData& A, const TwistAssignment& t, Rat cutoff = Rat(-1))
        : A_(A), t_(t) {
        cutoff_ = (cutoff < 0) ? Rat(default_max_level()) : cutoff;
        rebuild();
    }

    const std::vector<WRoot>& roots() const { return roots_; }
    const GradedSeries& series() const { return *series_; }
    Rat cutoff() const { return cutoff_; }

    void ensure_level(const Rat& level) {
        if (level <= cutoff_) return;
        while (cutoff_ < level) cutoff_ *= 2;  // doubling keeps rebuilds rare
        rebuild();
    }
    void ensure_charge(const Rat& charge) {
        Rat mag = charge >= 0 ? charge : -charge;
        if (mag <= query_span_) return;
        extra_charge_ = 2 * mag;
        rebuild();
    }
    Rat query_span() const { return query_span_; }

    Int count(const Eta& e) {
        if (e.level < 0) return 0;
        ensure_level(e.level);
        ensure_charge(e.charge);
        return series_->coefficient(e);
    }

    /// partitions of e avoiding one multiplicity unit of the given odd root
    Int count_excluding(const WRoot& root, const Eta& e) {
        if (e.level < 0) return 0;
        ensure_level(e.level);
        ensure_charge(e.charge);
        if (!root.odd) throw std::invalid_argument("exclusion defined for odd roots only");
        bool found = false;
        for (const auto& r : roots_)
            if (r.odd && r.charge == root.charge && r.level == root.level) found = true;
        if (!found)
            throw std::invalid_argument("excluded root is not a positive root of the sector");
        auto key = std::make_pair(root.charge, root.level);
        auto it = excl_.find(key);
        if (it == excl_.end()) {
            GradedSeries s = *series_;
            s.div_odd_once(root.charge, root.level);
            it = excl_.emplace(key, std::move(s)).first;
        }
        return it->second.coefficient(e);
    }

    /// independent bounded-knapsack enumeration over the same root multiset
    Int count_enumerative(const Eta& e) const {
        if (e.level < 0 || e.level > cutoff_) return 0;
        return enumerate(0, e.charge, e.level, -1, memo_);
    }
    Int count_enumerative_excluding(const WRoot& root, const Eta& e) const {
        if (e.level < 0 || e.level > cutoff_) return 0;
        long slot = -1;
        for (size_t i = 0; i < expanded_.size(); ++i)
            if (expanded_[i].odd && expanded_[i].charge == root.charge &&
                expanded_[i].level == root.level) {
                slot = static_cast<long>(i);
                break;
            }
        if (slot < 0)
            throw std::invalid_argument("excluded root is not a positive root of the sector");
        std::map<std::tuple<size_t, Rat, Rat>, Int> memo;
        return enumerate(0, e.charge, e.level, slot, memo);
    }

  private:
    void rebuild() {
        roots_ = positive_w_roots(A_, t_, cutoff_);
        long cd = 2, ld = 2;
        Rat cmax(1);
        for (const auto& r : roots_) {
            cd = detail::lcm_den(cd, r.charge);
            ld = detail::lcm_den(ld, r.level);
            Rat ac = r.charge >= 0 ? r.charge : -r.charge;
            if (ac > cmax) cmax = ac;
        }
        // neg_span_ bounds the total negative charge of any partition within the
        // level budget; the series window adds it as slack behind the promised
        // query span so truncation cannot bend coefficients inside it.
        neg_span_ = 2 * cutoff_ * cmax + 2;
        query_span_ = cmax * (2 * cutoff_ + 2) + 2;
        if (extra_charge_ > query_span_) query_span_ = extra_charge_;
        long win = to_long(rat_floor((query_span_ + neg_span_) * cd)) + 1;
        long max_lu = to_long(rat_floor(cutoff_ * ld));
        series_.emplace(cd, ld, max_lu, win);
        for (const auto& r : roots_) {
            if (r.odd)
                series_->mul_odd(r.charge, r.level, r.mult);
            else
                series_->mul_even(r.charge, r.level, r.mult);
        }
        expanded_.clear();
        for (const auto& r : roots_)
            for (int copy = 0; copy < r.mult; ++copy)
                expanded_.push_back({r.charge, r.level, r.odd, 1});
        excl_.clear();
        memo_.clear();
    }

    // Multiplicities are expanded into independent unit roots: an even root of
    // multiplicity two counts compositions over two commuting copies, matching
    // the squared factor in the generating product.
    Int enumerate(size_t idx, const Rat& charge, const Rat& level, long excl_slot,
                  std::map<std::tuple<size_t, Rat, Rat>, Int>& memo) const {
        if (level < 0) return 0;
        if (idx == expanded_.size()) return (charge == 0 && level == 0) ? 1 : 0;
        auto key = std::make_tuple(idx, charge, level);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        const WRoot& r = expanded_[idx];
        long max_uses;
        if (r.odd) {
            max_uses = (excl_slot == static_cast<long>(idx)) ? 0 : 1;
        } else if (r.level > 0) {
            max_uses = to_long(rat_floor(level / r.level));
        } else {
            // level-0 roots carry positive charge; later roots can pull the charge
            // back up by at most neg_span_, which bounds the use count.
            Rat bound = (charge + neg_span_) / r.charge;
            max_uses = bound < 0 ? 0 : to_long(rat_floor(bound));
        }
        Int total = 0;
        for (long used = 0; used <= max_uses; ++used) {
            Rat l = level - Rat(used) * r.level;
            if (l < 0) break;
            total += enumerate(idx + 1, charge - Rat(used) * r.charge, l, excl_slot, memo);
        }
        memo[key] = total;
        return total;
    }

    const AlgebraData& A_;
    TwistAssignment t_;
    Rat cutoff_;
    Rat neg_span_;
    Rat query_span_;
    Rat extra_charge_;
    std::vector<WRoot> roots_;
    std::vector<WRoot> expanded_;
    std::optional<GradedSeries> series_;
    std::map<std::pair<Rat, Rat>, GradedSeries> excl_;
    mutable std::map<std::tuple<size_t, Rat, Rat>, Int> memo_;
};

}  // namespace wkac
