#include "diffcech/funclass.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/expr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace diffcech {

AffineMap AffineMap::identity(std::size_t n) { return {ScalarMatrix::identity(n), ScalarVector(n)}; }

AffineMap AffineMap::translation(const ScalarVector& v) { return {ScalarMatrix::identity(v.size()), v}; }

ScalarVector AffineMap::apply(const ScalarVector& y) const {
    if (y.size() != A.cols()) throw ClassError("affine map applied to a point of the wrong dimension");
    ScalarVector out = A.apply(y);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

AffineMap AffineMap::then(const AffineMap& other) const {
    if (other.A.cols() != A.rows()) throw ClassError("affine maps cannot be composed: dimension mismatch");
    return {other.A * A, other.apply(b)};
}

AffineMap AffineMap::inverse() const {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw ClassError("non-square affine map has no inverse");
    RowEchelon e = rref(hconcat(A, ScalarMatrix::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw ClassError("affine map is not invertible");
    ScalarMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.R(i, n + j);
    ScalarVector nb = inv.apply(b);
    for (auto& v : nb) v = -v;
    return {inv, nb};
}

bool AffineMap::is_identity() const {
    return A.rows() == A.cols() && A == ScalarMatrix::identity(A.rows()) &&
           std::all_of(b.begin(), b.end(), [](const Scalar& s) { return s.is_zero(); });
}

MPoly act(const AffineMap& phi, const MPoly& h) {
    if (h.num_variables() > static_cast<int>(phi.target_dim()))
        throw ClassError("function uses more variables than the affine map provides");
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < phi.target_dim(); ++i) {
        MPoly img(phi.b[i]);
        for (std::size_t j = 0; j < phi.source_dim(); ++j)
            if (!phi.A(i, j).is_zero()) img += MPoly::monomial(phi.A(i, j), [&] {
                Exponent e(j + 1, 0);
                e[j] = 1;
                return e;
            }());
        images.push_back(std::move(img));
    }
    return h.substitute(images);
}

FunctionClass::FunctionClass(int dim, int max_degree) : dim_(dim), max_degree_(max_degree) {
    if (dim < 0 || max_degree < 0) throw ClassError("function class needs non-negative dimension and degree");
    for (int d = 0; d <= max_degree; ++d) {
        Exponent e(static_cast<std::size_t>(dim), 0);
        std::function<void(int, int)> fill = [&](int var, int left) {
            if (var == dim - 1 || dim == 0) {
                if (dim > 0) e[static_cast<std::size_t>(var)] = left;
                if (dim == 0 && left > 0) return;
                Exponent t = e;
                while (!t.empty() && t.back() == 0) t.pop_back();
                basis_.push_back(t);
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[static_cast<std::size_t>(var)] = k;
                fill(var + 1, left - k);
            }
            e[static_cast<std::size_t>(var)] = 0;
        };
        fill(0, d);
    }
}

bool FunctionClass::contains(const MPoly& h) const {
    return h.degree() <= max_degree_ && h.num_variables() <= dim_;
}

ScalarVector FunctionClass::coordinates(const MPoly& h) const {
    if (!contains(h))
        throw ClassError("function " + h.str() + " lies outside class " + str());
    ScalarVector out;
    out.reserve(basis_.size());
    for (const auto& e : basis_) out.push_back(h.coeff(e));
    return out;
}

MPoly FunctionClass::element(const ScalarVector& coords) const {
    if (coords.size() != basis_.size()) throw ClassError("coordinate vector has the wrong length for " + str());
    MPoly out;
    for (std::size_t i = 0; i < coords.size(); ++i) out += MPoly::monomial(coords[i], basis_[i]);
    return out;
}

MPoly FunctionClass::basis_element(std::size_t i) const { return MPoly::monomial(Scalar(1), basis_.at(i)); }

std::string FunctionClass::str() const {
    return "(n=" + std::to_string(dim_) + ", D=" + std::to_string(max_degree_) + ")";
}

FunctionElement::FunctionElement(FunctionClass cls, MPoly value) : cls_(std::move(cls)), value_(std::move(value)) {
    if (!cls_.contains(value_)) throw ClassError("function " + value_.str() + " lies outside class " + cls_.str());
}

FunctionElement FunctionElement::parse(const FunctionClass& cls, const std::string& text) {
    return FunctionElement(cls, parse_polynomial_expression(text));
}

FunctionElement act(const AffineMap& phi, const FunctionElement& h) {
    const int n = h.function_class().dim();
    if (static_cast<int>(phi.source_dim()) != n || static_cast<int>(phi.target_dim()) != n)
        throw ClassError("affine map does not act on the domain of " + h.function_class().str());
    return FunctionElement(h.function_class(), act(phi, h.value()));
}

} // namespace diffcech
