#pragma once

// Finite presentations of diffeological spaces: nerves of good covers and
// quotients of R^n by finitely generated abelian groups of affine maps.

#include "diffcech/funclass.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace diffcech {

using Tuple = std::vector<int>;
using Simplex = std::vector<int>; // sorted, no repeats

/// Optional geometry for a nerve: each chart is a set of atoms, atoms carry
/// an adjacency relation. Enables sites, refinements and common refinements.
struct Supports {
    std::vector<std::vector<int>> chart_atoms; // sorted per chart
    std::vector<std::vector<int>> adjacency;   // per atom, sorted
    std::size_t atom_count() const { return adjacency.size(); }
    friend bool operator==(const Supports&, const Supports&) = default;
};

class FiniteNerve {
public:
    /// `alive` lists simplices with at least two charts; singletons are implicit.
    /// Every face of a listed simplex must be listed (ValidationError names the missing face).
    FiniteNerve(std::vector<std::string> charts, std::vector<Simplex> alive, int k_max, bool alternating,
                std::optional<Supports> supports = std::nullopt);

    /// Face closure of the given simplices.
    static FiniteNerve from_facets(std::vector<std::string> charts, const std::vector<Simplex>& facets, int k_max,
                                   bool alternating, std::optional<Supports> supports = std::nullopt);
    /// Alive simplices are the subsets of atom carriers.
    static FiniteNerve from_supports(std::vector<std::string> charts, Supports supports, int k_max, bool alternating);

    std::size_t num_charts() const noexcept { return charts_.size(); }
    const std::vector<std::string>& charts() const noexcept { return charts_; }
    int k_max() const noexcept { return k_max_; }
    bool alternating() const noexcept { return alternating_; }
    const std::optional<Supports>& supports() const noexcept { return supports_; }
    /// Alive simplices of size >= 2, ordered by size then lexicographically.
    const std::vector<Simplex>& alive_simplices() const noexcept { return alive_list_; }
    bool is_alive(const Simplex& s) const;
    bool tuple_alive(const Tuple& t) const;

    /// Alive (k+1)-tuples in lexicographic order; DegreeError if k > k_max.
    const std::vector<Tuple>& tuples(int k) const;
    /// Same, also allowing k = k_max + 1 (targets of the top coboundary).
    const std::vector<Tuple>& tuples_unchecked(int k) const;
    std::size_t num_tuples(int k) const { return tuples_unchecked(k).size(); }
    /// Position of t among tuples_unchecked(t.size() - 1), or nullopt.
    std::optional<std::size_t> index_of(const Tuple& t) const;
    /// Index in degree k-1 of the i-th face of tuple number idx of degree k.
    std::size_t face_index(int k, std::size_t idx, int i) const { return faces_[k][idx * (k + 1) + i]; }

    /// Sites are points of the space: atoms when supports exist, otherwise one per alive simplex (singletons included).
    std::size_t num_sites() const { return site_carriers_.size(); }
    /// Charts containing the site.
    const std::vector<int>& site_carrier(std::size_t site) const { return site_carriers_.at(site); }

    /// Connected components of the 1-skeleton, as a component label per chart.
    std::vector<int> components() const;

    friend bool operator==(const FiniteNerve& x, const FiniteNerve& y) {
        return x.charts_ == y.charts_ && x.alive_list_ == y.alive_list_ && x.k_max_ == y.k_max_ &&
               x.alternating_ == y.alternating_ && x.supports_ == y.supports_;
    }

private:
    void build();

    std::vector<std::string> charts_;
    std::vector<Simplex> alive_list_;
    std::set<Simplex> alive_;
    int k_max_;
    bool alternating_;
    std::optional<Supports> supports_;
    std::vector<std::vector<Tuple>> tuples_;
    std::vector<std::map<Tuple, std::size_t>> index_;
    std::vector<std::vector<std::size_t>> faces_;
    std::vector<std::vector<int>> site_carriers_;
};

/// d_i on a nerve tuple: drops entry i. Error if i is out of range.
Tuple degeneracy(const Tuple& t, int i);

using KElement = std::vector<long>;

struct QuotientGenerator {
    long torsion = 0; // 0 for infinite order
    AffineMap map;
    friend bool operator==(const QuotientGenerator&, const QuotientGenerator&) = default;
};

/// A point (y; k_1, ..., k_k) of N(Q)_k for a translation groupoid: the tuple (y, y.k_1, ..., y.k_k).
struct QuotientPoint {
    ScalarVector y;
    std::vector<KElement> kappas;
    friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
};

class GroupQuotient {
public:
    GroupQuotient(int dim, std::vector<QuotientGenerator> generators, bool free, int function_class_degree);

    int dim() const noexcept { return dim_; }
    const std::vector<QuotientGenerator>& generators() const noexcept { return gens_; }
    std::size_t rank() const noexcept { return gens_.size(); }
    bool is_free() const noexcept { return free_; }
    int function_class_degree() const noexcept { return degree_; }
    FunctionClass function_class() const { return FunctionClass(dim_, degree_); }

    bool finite() const;
    /// |K| for finite K.
    std::size_t order() const;
    /// Highest cochain degree the presentation supports (2 for infinite K).
    int k_max() const { return finite() ? 64 : 2; }

    KElement zero() const { return KElement(gens_.size(), 0); }
    KElement generator(std::size_t i) const;
    KElement reduce(KElement k) const;
    KElement add(const KElement& x, const KElement& y) const;
    KElement neg(const KElement& x) const;
    KElement sub(const KElement& x, const KElement& y) const { return add(x, neg(y)); }

    /// The affine map y -> y . k.
    AffineMap action(const KElement& k) const;
    ScalarVector act_point(const ScalarVector& y, const KElement& k) const { return action(k).apply(y); }
    /// All elements of a finite K in lexicographic order.
    std::vector<KElement> elements() const;
    /// Elements k of a finite K (or within the given box for infinite generators) with y . k = y2.
    std::vector<KElement> connecting_elements(const ScalarVector& y, const ScalarVector& y2) const;

    /// d_i on a quotient point.
    QuotientPoint degeneracy(const QuotientPoint& p, int i) const;

    friend bool operator==(const GroupQuotient&, const GroupQuotient&) = default;

private:
    int dim_;
    std::vector<QuotientGenerator> gens_;
    bool free_;
    int degree_;
};

class Presentation {
public:
    Presentation(FiniteNerve n, std::string id = "") : data_(std::move(n)), id_(std::move(id)) {}
    Presentation(GroupQuotient q, std::string id = "") : data_(std::move(q)), id_(std::move(id)) {}

    bool is_nerve() const noexcept { return std::holds_alternative<FiniteNerve>(data_); }
    bool is_quotient() const noexcept { return std::holds_alternative<GroupQuotient>(data_); }
    const FiniteNerve& nerve() const;
    const GroupQuotient& quotient() const;
    const std::string& id() const noexcept { return id_; }
    int k_max() const;

    friend bool operator==(const Presentation& x, const Presentation& y) { return x.data_ == y.data_; }

private:
    std::variant<FiniteNerve, GroupQuotient> data_;
    std::string id_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

inline PresentationPtr make_presentation(FiniteNerve n, std::string id = "") {
    return std::make_shared<const Presentation>(std::move(n), std::move(id));
}
inline PresentationPtr make_presentation(GroupQuotient q, std::string id = "") {
    return std::make_shared<const Presentation>(std::move(q), std::move(id));
}

/// Nerves: an index map source chart -> target chart. Quotients: an affine map
/// of domains plus a homomorphism K -> K' (column i = image of generator i).
class PresentationMorphism {
public:
    static PresentationMorphism nerve_map(PresentationPtr source, PresentationPtr target, std::vector<int> index_map);
    static PresentationMorphism quotient_map(PresentationPtr source, PresentationPtr target, AffineMap domain_map,
                                             std::vector<KElement> generator_images);
    static PresentationMorphism identity(PresentationPtr p);

    const PresentationPtr& source() const noexcept { return source_; }
    const PresentationPtr& target() const noexcept { return target_; }
    const std::vector<int>& index_map() const noexcept { return index_map_; }
    const AffineMap& domain_map() const noexcept { return domain_map_; }
    const std::vector<KElement>& generator_images() const noexcept { return gen_images_; }

    /// Supports of every source chart lie inside those of its image chart (same atoms).
    bool is_refinement() const;
    /// ev-compatibility: chart containment for nerves, intertwining for quotients.
    bool ev_compatible() const;

    Tuple map_tuple(const Tuple& t) const;
    KElement map_element(const KElement& k) const;

private:
    PresentationPtr source_, target_;
    std::vector<int> index_map_;
    AffineMap domain_map_;
    std::vector<KElement> gen_images_;
};

struct CommonRefinement {
    PresentationPtr refinement;
    PresentationMorphism to_first;
    PresentationMorphism to_second;
};

/// Identity morphisms when Q == R; otherwise the intersection cover built from
/// the supports. CompatibilityError when no supports are available, the atom
/// sets differ, or an intersection is disconnected.
CommonRefinement common_refinement(const PresentationPtr& q, const PresentationPtr& r);

} // namespace diffcech
