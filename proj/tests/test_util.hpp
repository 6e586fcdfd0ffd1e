#pragma once

#include <random>

#include "plurikit/parse.hpp"

namespace plurikit::testing {

inline KappaRational rand_kappa_rational(std::mt19937_64& rng, int max_deg = 2) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    auto poly = [&](bool nonzero) {
        for (;;) {
            std::vector<BigRational> c(deg(rng) + 1);
            for (auto& v : c) v = BigRational(coeff(rng));
            KappaPoly p(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return KappaRational(poly(false), poly(true));
}

inline BigRational rand_rational(std::mt19937_64& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 7);
    return BigRational(num(rng), den(rng));
}

// Random polynomial in the T variables of the given size.
inline Poly rand_t_poly(std::mt19937_64& rng, int n, int max_degree, int max_terms,
                        bool kappa_coeffs = true) {
    Ambient amb{n};
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> idx(1, n);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Poly p(amb);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int d = degree(rng);
        for (int s = 0; s < d; ++s) m = m * Monomial::var(VarId::t(idx(rng), idx(rng)));
        KappaRational c = kappa_coeffs ? rand_kappa_rational(rng, 1)
                                       : KappaRational(BigRational(coeff(rng)));
        p.add_term(m, c);
    }
    return p;
}

// Random homogeneous T-polynomial of exact degree d.
inline Poly rand_homogeneous_t_poly(std::mt19937_64& rng, int n, int d, int max_terms) {
    Ambient amb{n};
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> idx(1, n);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Poly p(amb);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int s = 0; s < d; ++s) m = m * Monomial::var(VarId::t(idx(rng), idx(rng)));
        int c = coeff(rng);
        p.add_term(m, KappaRational(BigRational(c == 0 ? 1 : c)));
    }
    return p;
}

}  // namespace plurikit::testing
