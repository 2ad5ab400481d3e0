#include "thetarich/complexity.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetarich {

ComplexityProfile::ComplexityProfile(std::vector<std::size_t> c, std::vector<std::size_t> p,
                                     std::size_t n_max, std::size_t window_length)
    : c_(std::move(c)), p_(std::move(p)), n_max_(n_max), window_length_(window_length) {
    if (c_.size() < n_max_ + 2 || p_.size() < n_max_ + 2)
        throw std::invalid_argument("ComplexityProfile: tables must cover n_max+1");
}

BalanceStatus ComplexityProfile::status(std::size_t n) const {
    const long long l = static_cast<long long>(lhs(n));
    const long long r = rhs(n);
    if (l == r) return BalanceStatus::equal;
    return l < r ? BalanceStatus::strict : BalanceStatus::violated;
}

ComplexityRow ComplexityProfile::row(std::size_t n) const {
    return ComplexityRow{n, c(n), dc(n), p(n), lhs(n), rhs(n), status(n)};
}

std::vector<ComplexityRow> ComplexityProfile::rows() const {
    std::vector<ComplexityRow> out;
    out.reserve(n_max_ + 1);
    for (std::size_t n = 0; n <= n_max_; ++n) out.push_back(row(n));
    return out;
}

ComplexityProfile complexity_profile(const Antimorphism& theta, const FactorIndex& idx,
                                     std::size_t n_max) {
    if (n_max + 1 > idx.max_len())
        throw std::invalid_argument("complexity_profile: window too short for n_max");
    if (!theta.alphabet().compatible_with(idx.source().alphabet()))
        throw std::invalid_argument("complexity_profile: alphabet mismatch");
    std::vector<std::size_t> c(n_max + 2), p(n_max + 2);
    for (std::size_t n = 0; n <= n_max + 1; ++n) {
        c[n] = idx.factor_count(n);
        std::size_t pals = 0;
        for (const Word& f : idx.factors(n))
            if (theta.palindrome(f)) ++pals;
        p[n] = pals;
    }
    return ComplexityProfile(std::move(c), std::move(p), n_max, idx.source().size());
}

ComplexityProfile complexity_profile(const Antimorphism& theta, const Word& w,
                                     std::size_t n_max) {
    if (n_max + 1 > w.size())
        throw std::invalid_argument("complexity_profile: window too short for n_max");
    return complexity_profile(theta, FactorIndex(w, n_max + 1), n_max);
}

ClosureStatus closure_under_theta(const Antimorphism& theta, const FactorIndex& idx,
                                  std::size_t n_max, ClosureMode mode) {
    if (!theta.alphabet().compatible_with(idx.source().alphabet()))
        throw std::invalid_argument("closure_under_theta: alphabet mismatch");
    const std::size_t limit = std::min(n_max, idx.max_len());
    ClosureStatus st{ClosureVerdict::closed_on_window, mode, limit, {}, std::nullopt};
    for (std::size_t n = 1; n <= limit; ++n) {
        ClosureLengthDetail detail{n, idx.factor_count(n), 0};
        for (const Word& f : idx.factors(n)) {
            if (!idx.contains(theta.apply(f))) {
                ++detail.missing_images;
                if (!st.counterexample) st.counterexample = f;
            }
        }
        st.per_length.push_back(detail);
    }
    if (st.counterexample)
        st.verdict = mode == ClosureMode::complete ? ClosureVerdict::not_closed
                                                   : ClosureVerdict::inconclusive;
    return st;
}

ClosureStatus closure_under_theta(const Antimorphism& theta, const Word& w,
                                  std::size_t n_max, ClosureMode mode) {
    return closure_under_theta(theta, FactorIndex(w, std::min(n_max, w.size())), n_max, mode);
}

SpecialFactors special_factors(const FactorIndex& idx, std::size_t n) {
    return SpecialFactors{idx.left_special(n), idx.right_special(n), idx.bispecial(n)};
}

std::vector<SweepRow> palindromic_balance_sweep(const Antimorphism& theta,
                                                const FactorIndex& idx, std::size_t n_lo,
                                                std::size_t n_hi) {
    ComplexityProfile prof = complexity_profile(theta, idx, n_hi);
    std::vector<SweepRow> out;
    out.reserve(n_hi - n_lo + 1);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const bool periodic = idx.special(n).empty();
        SweepRow row{n,
                     prof.lhs(n),
                     prof.rhs(n),
                     prof.status(n),
                     periodic,
                     !periodic || prof.lhs(n) == 2};
        out.push_back(row);
    }
    return out;
}

}  // namespace thetarich
