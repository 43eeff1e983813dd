#ifndef SUPERDER_SUPERALGEBRA_HPP
#define SUPERDER_SUPERALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superder/rational.hpp"
#include "superder/subspace.hpp"

namespace superder {

struct BasisVector {
    std::string name;
    int parity = 0;  // 0 even, 1 odd
};

/// Coordinates in an algebra's fixed basis order.
struct Element {
    std::vector<Rational> coords;

    Element() = default;
    explicit Element(std::size_t dim) : coords(dim) {}
    explicit Element(std::vector<Rational> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    bool is_zero() const;

    Element& operator+=(const Element& other);
    Element& operator*=(const Rational& c);
    bool operator==(const Element&) const = default;
};

Element operator+(Element a, const Element& b);
Element operator*(const Rational& c, Element a);
Element operator-(Element a);

/// One bracket entry of an input table, with names still unresolved.
struct BracketSpec {
    std::string left;
    std::string right;
    std::vector<std::pair<std::string, std::string>> result;  // (coeff, basis)
};

struct Violation {
    enum class Kind { Grading, Skew, Jacobi };
    Kind kind;
    // Grading: (i, j, k); Skew: (i, j, unused); Jacobi: (x, y, z)
    std::array<std::size_t, 3> at{};
    Element residual;
};

/// Malformed input table: unknown names, bad coefficients, duplicates.
/// Distinct from axiom violations, which are data returned by violations().
class AlgebraFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A finite-dimensional Lie superalgebra given by structure constants.
/// The structure tensor is stored for all ordered pairs: the loader takes
/// one orientation per bracket and fills the other one by graded
/// skew-symmetry, keeping explicitly given pairs untouched so that
/// inconsistent input surfaces as a Skew violation.
/// Immutable after construction; the axiom check runs at load time.
class SuperAlgebra {
  public:
    static SuperAlgebra from_table(std::string name,
                                   std::vector<BasisVector> basis,
                                   const std::vector<BracketSpec>& brackets);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    int parity(std::size_t i) const { return basis_[i].parity; }
    const std::string& basis_name(std::size_t i) const { return basis_[i].name; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// [x_i, x_j] as an Element.
    const Element& structure(std::size_t i, std::size_t j) const {
        return table_[i * dim() + j];
    }

    Element bracket(const Element& x, const Element& y) const;

    /// Grading, graded skew-symmetry and graded Jacobi violations, in a fixed
    /// deterministic order. Empty means the table is a Lie superalgebra.
    const std::vector<Violation>& violations() const { return violations_; }
    bool is_valid() const { return violations_.empty(); }

    /// True iff [x_i, v] lies in span{subset} for every basis i and v in the
    /// subset.
    bool is_ideal(const std::vector<std::size_t>& subset) const;

    /// {x : [x, y] = 0 for all y}, via the nullspace of the stacked
    /// ad-evaluation system.
    Subspace center() const;

    std::string describe_violation(const Violation& v) const;

  private:
    SuperAlgebra() = default;
    void check_axioms();

    std::string name_;
    std::vector<BasisVector> basis_;
    std::vector<Element> table_;  // dim*dim entries, row-major over (i, j)
    std::vector<Violation> violations_;
};

/// Built-in algebras: "super-schrodinger", "osp12", "super-heisenberg",
/// "even-schrodinger". Throws AlgebraFormatError on unknown names.
SuperAlgebra catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// Same basis names, parities and structure constants (the display name may
/// differ).
bool structurally_equal(const SuperAlgebra& a, const SuperAlgebra& b);

}  // namespace superder

#endif
