#pragma once

// Polynomial function classes on R^n: bounded total degree, closed under
// affine precomposition. These stand in for smooth maps into the R-model.

#include "diffcech/linalg.hpp"
#include "diffcech/mpoly.hpp"

#include <string>
#include <vector>

namespace diffcech {

/// y -> A y + b, with A of shape m x n.
struct AffineMap {
    ScalarMatrix A;
    ScalarVector b;

    static AffineMap identity(std::size_t n);
    static AffineMap translation(const ScalarVector& v);

    std::size_t source_dim() const { return A.cols(); }
    std::size_t target_dim() const { return A.rows(); }

    ScalarVector apply(const ScalarVector& y) const;
    /// x -> other(this(x)).
    AffineMap then(const AffineMap& other) const;
    /// ClassError when A is not square and invertible.
    AffineMap inverse() const;
    bool is_identity() const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// h -> h o phi, i.e. (h . k)(y) = h(y . k) for the map phi of k.
MPoly act(const AffineMap& phi, const MPoly& h);

class FunctionClass {
public:
    FunctionClass(int dim, int max_degree);

    int dim() const noexcept { return dim_; }
    int max_degree() const noexcept { return max_degree_; }
    /// Monomials of total degree <= D, lowest degree first; x0 before x1 within a degree.
    const std::vector<Exponent>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    bool contains(const MPoly& h) const;
    /// ClassError if h is not in the class.
    ScalarVector coordinates(const MPoly& h) const;
    MPoly element(const ScalarVector& coords) const;
    MPoly basis_element(std::size_t i) const;

    FunctionClass raised(int extra) const { return FunctionClass(dim_, max_degree_ + extra); }
    std::string str() const;

    friend bool operator==(const FunctionClass& x, const FunctionClass& y) {
        return x.dim_ == y.dim_ && x.max_degree_ == y.max_degree_;
    }

private:
    int dim_;
    int max_degree_;
    std::vector<Exponent> basis_;
};

/// A member of a function class.
class FunctionElement {
public:
    FunctionElement(FunctionClass cls, MPoly value);

    const FunctionClass& function_class() const noexcept { return cls_; }
    const MPoly& value() const noexcept { return value_; }

    ScalarVector coordinates() const { return cls_.coordinates(value_); }
    std::string str() const { return value_.str(); }
    static FunctionElement parse(const FunctionClass& cls, const std::string& text);

    /// Equal as functions, whatever the declared classes.
    friend bool operator==(const FunctionElement& x, const FunctionElement& y) { return x.value_ == y.value_; }

private:
    FunctionClass cls_;
    MPoly value_;
};

/// Action of an affine map on a class member; ClassError on a dimension mismatch.
FunctionElement act(const AffineMap& phi, const FunctionElement& h);

} // namespace diffcech
