#ifndef SUPERDER_DERIVATIONS_HPP
#define SUPERDER_DERIVATIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "superder/matrix.hpp"
#include "superder/subspace.hpp"
#include "superder/superalgebra.hpp"

namespace superder {

/// An endomorphism of the algebra's underlying space, acting on coordinate
/// columns: column j is the image of the j-th basis vector.
///
/// Maps embed into the n^2-dimensional endomorphism space by column-major
/// flattening: flat[j*n + k] = matrix(k, j). Every module uses this
/// convention.
class LinearMap {
  public:
    LinearMap() = default;
    /// A declared degree means the map is homogeneous: entry (k, i) must
    /// vanish whenever parity(k) != parity(i) + degree mod 2; the constructor
    /// checks this against the given parities and throws on mismatch.
    explicit LinearMap(Matrix m, std::optional<int> degree = std::nullopt,
                       const std::vector<int>* parities = nullptr);

    static LinearMap identity_map(std::size_t n);

    std::size_t dim() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }
    std::optional<int> degree() const { return degree_; }

    Element apply(const Element& x) const;

    std::vector<Rational> flatten() const;
    static LinearMap from_flat(const std::vector<Rational>& flat);

    bool operator==(const LinearMap&) const = default;

  private:
    Matrix matrix_;
    std::optional<int> degree_;
};

/// ad_x as a LinearMap: y -> [x, y].
LinearMap ad(const SuperAlgebra& alg, const Element& x);

struct DerivationSpace {
    Subspace even;   // degree-0 super-derivations, embedded in dim n^2
    Subspace odd;    // degree-1
    Subspace total;  // even + odd (always a direct sum)
};

/// Solves the super-Leibniz system D[x_i,x_j] = [Dx_i,x_j]
/// + (-1)^{deg*|x_i|} [x_i, Dx_j] over all ordered basis pairs, per degree.
/// Throws std::invalid_argument when the algebra has axiom violations.
DerivationSpace derivation_space(const SuperAlgebra& alg);

/// span{ad(x_i)} in the endomorphism space; dim = n - dim center.
Subspace inner_space(const SuperAlgebra& alg);

/// The outer derivation of the super Schrodinger algebra: zero on
/// e, f, h, E, F; p -> p, q -> q, z -> 2z, G -> G. Degree 0.
LinearMap delta_map();

struct DerivationCheck {
    bool ok = false;
    struct Counterexample {
        std::size_t i = 0, j = 0;
        int degree = 0;
    };
    std::optional<Counterexample> counterexample;
};

/// Super-Leibniz test. Non-homogeneous maps are split into their two
/// homogeneous components and each component must satisfy the rule.
DerivationCheck is_derivation(const SuperAlgebra& alg, const LinearMap& d);

struct DerDecompositionReport {
    bool delta_is_derivation = false;
    bool delta_not_inner = false;
    bool inner_plus_delta_is_der = false;
    bool dim_der_is_inner_plus_one = false;
    std::size_t dim_der = 0;
    std::size_t dim_inner = 0;

    bool all() const {
        return delta_is_derivation && delta_not_inner &&
               inner_plus_delta_is_der && dim_der_is_inner_plus_one;
    }
};

/// Machine check that Der = IDer + span{delta} with the explicit delta, for
/// the super-schrodinger catalog entry (throws for other algebras).
DerDecompositionReport verify_der_decomposition(const SuperAlgebra& alg);

struct DerivationCoordinates {
    Element inner;   // z-coefficient normalized to 0
    Rational outer;  // multiplier of delta
};

/// Writes d = ad(inner) + outer * delta. Returns nullopt when d is not a
/// derivation. Requires the super-schrodinger catalog entry.
std::optional<DerivationCoordinates> decompose(const SuperAlgebra& alg,
                                               const LinearMap& d);

}  // namespace superder

#endif
