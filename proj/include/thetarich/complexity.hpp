#pragma once

#include <optional>
#include <vector>

#include "thetarich/core.hpp"

namespace thetarich {

/// How P(n) + P(n+1) compares against ΔC(n) + 2 on the window.
enum class BalanceStatus { equal, strict, violated };

struct ComplexityRow {
    std::size_t n;
    std::size_t c;    // C(n)
    long long dc;     // C(n+1) - C(n)
    std::size_t p;    // P(n)
    std::size_t lhs;  // P(n) + P(n+1)
    long long rhs;    // ΔC(n) + 2
    BalanceStatus status;
};

/// Per-n complexity table over a finite window: C(n), ΔC(n), P(n) and the
/// inequality status, for n = 0..n_max. C and P are exact counts over the
/// window's factor set; window_length records the prefix analyzed.
class ComplexityProfile {
public:
    /// c and p must cover n = 0..n_max+1.
    ComplexityProfile(std::vector<std::size_t> c, std::vector<std::size_t> p,
                      std::size_t n_max, std::size_t window_length);

    std::size_t n_max() const { return n_max_; }
    std::size_t window_length() const { return window_length_; }

    std::size_t c(std::size_t n) const { return c_.at(n); }
    std::size_t p(std::size_t n) const { return p_.at(n); }
    long long dc(std::size_t n) const {
        return static_cast<long long>(c_.at(n + 1)) - static_cast<long long>(c_.at(n));
    }
    std::size_t lhs(std::size_t n) const { return p_.at(n) + p_.at(n + 1); }
    long long rhs(std::size_t n) const { return dc(n) + 2; }
    BalanceStatus status(std::size_t n) const;

    ComplexityRow row(std::size_t n) const;
    /// Rows for n = 0..n_max.
    std::vector<ComplexityRow> rows() const;

private:
    std::vector<std::size_t> c_;
    std::vector<std::size_t> p_;
    std::size_t n_max_;
    std::size_t window_length_;
};

/// Exact counts over the window. Requires N+1 <= max indexed length
/// (resp. N+1 <= |w|); throws std::invalid_argument otherwise.
ComplexityProfile complexity_profile(const Antimorphism& theta, const FactorIndex& idx,
                                     std::size_t n_max);
ComplexityProfile complexity_profile(const Antimorphism& theta, const Word& w,
                                     std::size_t n_max);

enum class ClosureMode { window, complete };
enum class ClosureVerdict { closed_on_window, not_closed, inconclusive };

struct ClosureLengthDetail {
    std::size_t n;
    std::size_t factor_count;
    std::size_t missing_images;
};

struct ClosureStatus {
    ClosureVerdict verdict;
    ClosureMode mode;
    std::size_t n_max;
    std::vector<ClosureLengthDetail> per_length;  // lengths 1..n_max
    /// Smallest factor (shortest, then lexicographic) whose Θ-image is
    /// absent from the window; present unless verdict is closed_on_window.
    std::optional<Word> counterexample;
};

/// Checks Θ(f) membership for every factor f with |f| <= N. A missing image
/// refutes closure only when the word is declared complete; on a window it
/// yields `inconclusive` (truncation can hide images).
ClosureStatus closure_under_theta(const Antimorphism& theta, const FactorIndex& idx,
                                  std::size_t n_max, ClosureMode mode);
ClosureStatus closure_under_theta(const Antimorphism& theta, const Word& w,
                                  std::size_t n_max, ClosureMode mode);

struct SpecialFactors {
    std::vector<Word> left;
    std::vector<Word> right;
    std::vector<Word> bispecial;
};

SpecialFactors special_factors(const FactorIndex& idx, std::size_t n);

struct SweepRow {
    std::size_t n;
    std::size_t lhs;
    long long rhs;
    BalanceStatus status;
    bool periodic_regime;     // no special factor of length n on the window
    bool no_special_lhs_two;  // periodic_regime implies lhs == 2
};

/// Per-n comparison of P(n)+P(n+1) against ΔC(n)+2 for n in [n_lo, n_hi],
/// with the no-special-factor regime annotated.
std::vector<SweepRow> palindromic_balance_sweep(const Antimorphism& theta,
                                                const FactorIndex& idx, std::size_t n_lo,
                                                std::size_t n_hi);

}  // namespace thetarich
