#pragma once

#include <random>

#include "rrcf/big_real.hpp"
#include "rrcf/golden.hpp"
#include "rrcf/series.hpp"

namespace rrcf::test {

// Fixed seeds everywhere so failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline Rational random_rational(long span = 20) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return {num(rng()), den(rng())};
}

inline GoldenNumber random_golden(long span = 20) { return {random_rational(span), random_rational(span)}; }

inline GoldenNumber random_nonzero_golden() {
    for (;;) {
        GoldenNumber x = random_golden();
        if (!x.is_zero()) return x;
    }
}

inline GoldenSeries random_series(long valuation, long order, long span = 6) {
    std::vector<std::pair<long, GoldenNumber>> terms;
    for (long e = valuation; e <= order; ++e) terms.emplace_back(e, random_golden(span));
    terms.front().second = GoldenNumber(1);  // unit lead, so inverse and sqrt apply
    return GoldenSeries::from_terms(terms, order);
}

inline BigReal tolerance(int digits, Precision p) { return pow10_neg(digits, p); }

inline bool close(const BigReal& a, const BigReal& b, int digits) {
    return abs(a - b) < tolerance(digits, a.precision());
}

}  // namespace rrcf::test
