#ifndef SUPERDER_SUBSPACE_HPP
#define SUPERDER_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "superder/matrix.hpp"

namespace superder {

/// A rational vector subspace in canonical form: the basis rows are the
/// nonzero rows of a reduced row-echelon matrix. Two subspaces are equal as
/// sets iff their canonical bases are identical entry-wise, so operator==
/// is exact set equality.
class Subspace {
  public:
    /// Zero subspace of the given ambient dimension.
    explicit Subspace(std::size_t ambient_dim);

    static Subspace span(std::size_t ambient_dim,
                         const std::vector<std::vector<Rational>>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }

    /// Basis rows in RREF, pivot columns strictly increasing.
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Rational>& v) const;

    bool operator==(const Subspace&) const = default;

  private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

/// Canonical basis of {v : m*v = 0}.
Subspace nullspace(const Matrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// {w : w.v = 0 for all v in s}, the annihilator under the dot pairing.
Subspace annihilator(const Subspace& s);

}  // namespace superder

#endif
