#include "rrcf/q_series.hpp"

#include <stdexcept>

namespace rrcf {

namespace {

ProductFactor one_minus(long e, int power = 1) { return {{{0, GoldenNumber(1)}, {e, GoldenNumber(-1)}}, power}; }

}  // namespace

GoldenSeries rr_theta_sum(RrSum kind, long order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    const long shift = kind == RrSum::numerator ? 3 : 1;
    // q-exponent lambda(5 lambda + shift)/2 is x-exponent 5 lambda (5 lambda + shift).
    std::vector<std::pair<long, GoldenNumber>> terms;
    for (long lambda = 0;; ++lambda) {
        bool any = false;
        for (int side = 0; side < (lambda == 0 ? 1 : 2); ++side) {
            const long l = side == 0 ? lambda : -lambda;
            const long e = 5 * l * (5 * l + shift);
            if (e > order) continue;
            terms.emplace_back(e, GoldenNumber(l % 2 == 0 ? 1 : -1));
            any = true;
        }
        if (!any && lambda > 0) break;
    }
    return GoldenSeries::from_terms(terms, order);
}

GoldenSeries rr_product(long order) {
    ProductSpec spec{[](long n) {
                         return std::vector<ProductFactor>{one_minus(10 * (5 * n - 1)), one_minus(10 * (5 * n - 4)),
                                                           one_minus(10 * (5 * n - 2), -1),
                                                           one_minus(10 * (5 * n - 3), -1)};
                     },
                     10};
    return infinite_product(spec, order);
}

GoldenSeries rr_series(long order) { return rr_product(order - 2).shifted(2); }

GoldenSeries euler_product(long order) {
    return infinite_product({[](long n) { return std::vector<ProductFactor>{one_minus(10 * n)}; }, 10}, order);
}

GoldenSeries pentagonal_sum(long order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    std::vector<std::pair<long, GoldenNumber>> terms{{0, GoldenNumber(1)}};
    for (long n = 1;; ++n) {
        // q-exponents n(3n-1)/2 and n(3n+1)/2, both with sign (-1)^n.
        const long e1 = 5 * n * (3 * n - 1);
        const long e2 = 5 * n * (3 * n + 1);
        if (e1 > order) break;
        const GoldenNumber sign(n % 2 == 0 ? 1 : -1);
        terms.emplace_back(e1, sign);
        if (e2 <= order) terms.emplace_back(e2, sign);
    }
    return GoldenSeries::from_terms(terms, order);
}

GoldenSeries euler_product_q5(long order) {
    return infinite_product({[](long n) { return std::vector<ProductFactor>{one_minus(50 * n)}; }, 50}, order);
}

GoldenSeries golden_factor_product(const GoldenNumber& c, long step, int power, long order) {
    if (step < 1) throw std::invalid_argument("factor step must be positive");
    ProductSpec spec{[c, step, power](long n) {
                         return std::vector<ProductFactor>{
                             {{{0, GoldenNumber(1)}, {step * n, c}, {2 * step * n, GoldenNumber(1)}}, power}};
                     },
                     step};
    return infinite_product(spec, order);
}

}  // namespace rrcf
