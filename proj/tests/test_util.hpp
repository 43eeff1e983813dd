#ifndef SUPERDER_TEST_UTIL_HPP
#define SUPERDER_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "superder/derivations.hpp"
#include "superder/superalgebra.hpp"

namespace test_util {

using namespace superder;

inline Rational rand_rational(std::mt19937_64& rng, int num_range = 5,
                              int den_range = 3) {
    const std::int64_t num =
        static_cast<std::int64_t>(rng() % (2 * num_range + 1)) - num_range;
    const std::int64_t den = static_cast<std::int64_t>(rng() % den_range) + 1;
    return Rational(num, den);
}

inline Matrix rand_matrix(std::mt19937_64& rng, std::size_t rows,
                          std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rand_rational(rng);
    return m;
}

inline std::vector<Rational> rand_vector(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> v(n);
    for (Rational& x : v)
        x = rand_rational(rng);
    return v;
}

/// Element from (basis name, coefficient string) pairs.
inline Element el(const SuperAlgebra& alg,
                  std::initializer_list<std::pair<const char*, const char*>>
                      terms) {
    Element x(alg.dim());
    for (const auto& [name, coeff] : terms)
        x.coords[*alg.index_of(name)] += parse_rational(coeff);
    return x;
}

inline Element unit(const SuperAlgebra& alg, const char* name) {
    Element x(alg.dim());
    x.coords[*alg.index_of(name)] = 1;
    return x;
}

/// Random element of a subspace (integer combination of basis rows).
inline std::vector<Rational> rand_member(std::mt19937_64& rng,
                                         const Subspace& s, int range = 3) {
    std::vector<Rational> v(s.ambient_dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        const std::int64_t c =
            static_cast<std::int64_t>(rng() % (2 * range + 1)) - range;
        if (c == 0)
            continue;
        for (std::size_t t = 0; t < s.ambient_dim(); ++t)
            v[t] += Rational(c) * s.basis().at(r, t);
    }
    return v;
}

inline SuperAlgebra abelian_even(std::size_t n) {
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < n; ++i)
        basis.push_back({"a" + std::to_string(i), 0});
    return SuperAlgebra::from_table("abelian" + std::to_string(n),
                                    std::move(basis), {});
}

}  // namespace test_util

#endif
