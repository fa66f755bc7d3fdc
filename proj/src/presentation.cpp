#include "diffcech/presentation.hpp"

#include "diffcech/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace diffcech {

namespace {

std::string simplex_str(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

Simplex support_of(Tuple t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

void add_subsets(const std::vector<int>& carrier, std::set<Simplex>& out) {
    const std::size_t n = carrier.size();
    if (n > 20) throw ValidationError("atom carrier with more than 20 charts");
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        if (__builtin_popcountl(mask) < 2) continue;
        Simplex s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1UL << i)) s.push_back(carrier[i]);
        out.insert(s);
    }
}

std::vector<std::vector<int>> carriers_of(const Supports& sup, std::size_t charts) {
    std::vector<std::vector<int>> carriers(sup.atom_count());
    for (std::size_t c = 0; c < charts; ++c)
        for (int a : sup.chart_atoms[c]) carriers[static_cast<std::size_t>(a)].push_back(static_cast<int>(c));
    return carriers;
}

/// Whether the atom set is connected under the adjacency relation.
bool connected(const std::vector<int>& atoms, const Supports& sup) {
    if (atoms.empty()) return false;
    std::set<int> members(atoms.begin(), atoms.end()), seen{atoms[0]};
    std::queue<int> todo;
    todo.push(atoms[0]);
    while (!todo.empty()) {
        int a = todo.front();
        todo.pop();
        for (int b : sup.adjacency[static_cast<std::size_t>(a)])
            if (members.count(b) && seen.insert(b).second) todo.push(b);
    }
    return seen.size() == members.size();
}

std::vector<std::vector<int>> components_of(const std::vector<int>& atoms, const Supports& sup) {
    std::set<int> members(atoms.begin(), atoms.end()), seen;
    std::vector<std::vector<int>> comps;
    for (int start : atoms) {
        if (seen.count(start)) continue;
        std::vector<int> comp{start};
        seen.insert(start);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int b : sup.adjacency[static_cast<std::size_t>(comp[i])])
                if (members.count(b) && seen.insert(b).second) comp.push_back(b);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> intersect(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

void validate_supports(const Supports& sup, std::size_t charts) {
    if (sup.chart_atoms.size() != charts) throw ValidationError("supports: expected one atom list per chart");
    const auto n = static_cast<int>(sup.atom_count());
    for (std::size_t c = 0; c < charts; ++c) {
        const auto& atoms = sup.chart_atoms[c];
        if (atoms.empty()) throw ValidationError("supports: chart " + std::to_string(c) + " has no atoms");
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (atoms[i] < 0 || atoms[i] >= n) throw ValidationError("supports: atom index out of range");
            if (i && atoms[i] <= atoms[i - 1]) throw ValidationError("supports: atom lists must be strictly increasing");
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b : sup.adjacency[static_cast<std::size_t>(a)]) {
            if (b < 0 || b >= n) throw ValidationError("supports: adjacency index out of range");
            const auto& back = sup.adjacency[static_cast<std::size_t>(b)];
            if (!std::binary_search(back.begin(), back.end(), a))
                throw ValidationError("supports: adjacency is not symmetric at atoms " + std::to_string(a) + "," +
                                      std::to_string(b));
        }
    auto carriers = carriers_of(sup, charts);
    for (int a = 0; a < n; ++a)
        if (carriers[static_cast<std::size_t>(a)].empty())
            throw ValidationError("supports: atom " + std::to_string(a) + " lies in no chart");
}

} // namespace

// ---------------------------------------------------------------------------

FiniteNerve::FiniteNerve(std::vector<std::string> charts, std::vector<Simplex> alive, int k_max, bool alternating,
                         std::optional<Supports> supports)
    : charts_(std::move(charts)), k_max_(k_max), alternating_(alternating), supports_(std::move(supports)) {
    if (charts_.empty()) throw ValidationError("nerve needs at least one chart");
    if (k_max_ < 0 || k_max_ > 8) throw ValidationError("k_max must lie in [0, 8]");
    const auto n = static_cast<int>(charts_.size());
    for (auto& s : alive) {
        for (int c : s)
            if (c < 0 || c >= n) throw ValidationError("alive simplex " + simplex_str(s) + " uses an unknown chart");
        Simplex sorted = support_of(s);
        if (sorted.size() != s.size()) throw ValidationError("alive simplex " + simplex_str(s) + " repeats a chart");
        if (sorted.size() >= 2) alive_.insert(sorted);
    }
    for (const auto& s : alive_) {
        if (s.size() < 3) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<long>(i));
            if (!alive_.count(face))
                throw ValidationError("alive simplex " + simplex_str(s) + " is missing its face " + simplex_str(face));
        }
    }
    if (supports_) {
        validate_supports(*supports_, charts_.size());
        std::set<Simplex> expected;
        for (const auto& carrier : carriers_of(*supports_, charts_.size())) add_subsets(carrier, expected);
        if (expected != alive_) throw ValidationError("alive simplices disagree with the chart supports");
    }
    build();
}

FiniteNerve FiniteNerve::from_facets(std::vector<std::string> charts, const std::vector<Simplex>& facets, int k_max,
                                     bool alternating, std::optional<Supports> supports) {
    std::set<Simplex> closure;
    for (const auto& f : facets) {
        Simplex s = support_of(f);
        if (s.size() != f.size()) throw ValidationError("facet " + simplex_str(f) + " repeats a chart");
        add_subsets(s, closure);
    }
    return FiniteNerve(std::move(charts), {closure.begin(), closure.end()}, k_max, alternating, std::move(supports));
}

FiniteNerve FiniteNerve::from_supports(std::vector<std::string> charts, Supports supports, int k_max, bool alternating) {
    validate_supports(supports, charts.size());
    std::set<Simplex> closure;
    for (const auto& carrier : carriers_of(supports, charts.size())) add_subsets(carrier, closure);
    return FiniteNerve(std::move(charts), {closure.begin(), closure.end()}, k_max, alternating, std::move(supports));
}

void FiniteNerve::build() {
    alive_list_.assign(alive_.begin(), alive_.end());
    std::stable_sort(alive_list_.begin(), alive_list_.end(),
                     [](const Simplex& x, const Simplex& y) { return x.size() < y.size(); });

    const int top = k_max_ + 1;
    const auto n = static_cast<int>(charts_.size());
    tuples_.assign(static_cast<std::size_t>(top + 1), {});
    Tuple cur;
    std::function<void()> extend = [&]() {
        const auto len = static_cast<int>(cur.size());
        if (len > 0) tuples_[static_cast<std::size_t>(len - 1)].push_back(cur);
        if (len == top + 1) return;
        const int start = (alternating_ && len > 0) ? cur.back() + 1 : 0;
        for (int a = start; a < n; ++a) {
            cur.push_back(a);
            if (tuple_alive(cur)) extend();
            cur.pop_back();
        }
    };
    extend();

    index_.assign(tuples_.size(), {});
    for (std::size_t k = 0; k < tuples_.size(); ++k)
        for (std::size_t i = 0; i < tuples_[k].size(); ++i) index_[k].emplace(tuples_[k][i], i);

    faces_.assign(tuples_.size(), {});
    for (std::size_t k = 1; k < tuples_.size(); ++k) {
        auto& table = faces_[k];
        table.reserve(tuples_[k].size() * (k + 1));
        for (const auto& t : tuples_[k])
            for (std::size_t i = 0; i <= k; ++i) table.push_back(index_[k - 1].at(degeneracy(t, static_cast<int>(i))));
    }

    site_carriers_.clear();
    if (supports_) {
        site_carriers_ = carriers_of(*supports_, charts_.size());
    } else {
        for (int c = 0; c < n; ++c) site_carriers_.push_back({c});
        for (const auto& s : alive_list_) site_carriers_.push_back(s);
    }
}

bool FiniteNerve::is_alive(const Simplex& s) const {
    if (s.empty()) return false;
    if (s.size() == 1) return s[0] >= 0 && s[0] < static_cast<int>(charts_.size());
    return alive_.count(s) > 0;
}

bool FiniteNerve::tuple_alive(const Tuple& t) const { return is_alive(support_of(t)); }

const std::vector<Tuple>& FiniteNerve::tuples(int k) const {
    if (k < 0 || k > k_max_)
        throw DegreeError("degree " + std::to_string(k) + " exceeds k_max = " + std::to_string(k_max_));
    return tuples_[static_cast<std::size_t>(k)];
}

const std::vector<Tuple>& FiniteNerve::tuples_unchecked(int k) const {
    if (k < 0 || k > k_max_ + 1)
        throw DegreeError("degree " + std::to_string(k) + " exceeds k_max + 1 = " + std::to_string(k_max_ + 1));
    return tuples_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> FiniteNerve::index_of(const Tuple& t) const {
    if (t.empty() || t.size() > index_.size()) return std::nullopt;
    const auto& m = index_[t.size() - 1];
    auto it = m.find(t);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::vector<int> FiniteNerve::components() const {
    std::vector<int> parent(charts_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& s : alive_list_) {
        if (s.size() != 2) continue;
        int a = find(s[0]), b = find(s[1]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> label(charts_.size()), root_label(charts_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < charts_.size(); ++c) {
        int r = find(static_cast<int>(c));
        if (root_label[r] < 0) root_label[r] = next++;
        label[c] = root_label[r];
    }
    return label;
}

Tuple degeneracy(const Tuple& t, int i) {
    if (i < 0 || i >= static_cast<int>(t.size()) || t.size() < 2)
        throw DegreeError("face index " + std::to_string(i) + " out of range for a tuple of length " +
                          std::to_string(t.size()));
    Tuple out = t;
    out.erase(out.begin() + i);
    return out;
}

// ---------------------------------------------------------------------------

GroupQuotient::GroupQuotient(int dim, std::vector<QuotientGenerator> generators, bool free, int function_class_degree)
    : dim_(dim), gens_(std::move(generators)), free_(free), degree_(function_class_degree) {
    if (dim_ < 0) throw ValidationError("quotient dimension must be non-negative");
    if (degree_ < 0) throw ValidationError("function_class_degree must be non-negative");
    const auto n = static_cast<std::size_t>(dim_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        const std::string who = "generator g" + std::to_string(i + 1);
        if (g.torsion < 0) throw ValidationError(who + ": torsion must be >= 0");
        if (g.map.A.rows() != n || g.map.A.cols() != n || g.map.b.size() != n)
            throw ValidationError(who + ": affine map must act on R^" + std::to_string(n));
        if (diffcech::rank(g.map.A) != n) throw ValidationError(who + ": linear part is not invertible");
        if (free_ && g.torsion != 0) throw ValidationError(who + ": a free action cannot have torsion");
        if (g.torsion > 0) {
            AffineMap power = AffineMap::identity(n);
            for (long t = 0; t < g.torsion; ++t) power = power.then(g.map);
            if (!power.is_identity())
                throw ValidationError(who + ": the " + std::to_string(g.torsion) + "-fold composite is not the identity");
        }
        for (std::size_t j = 0; j < i; ++j)
            if (!(g.map.then(gens_[j].map) == gens_[j].map.then(g.map)))
                throw ValidationError("generators g" + std::to_string(j + 1) + " and g" + std::to_string(i + 1) +
                                      " do not commute");
    }
}

bool GroupQuotient::finite() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const QuotientGenerator& g) { return g.torsion > 0; });
}

std::size_t GroupQuotient::order() const {
    if (!finite()) throw UnsupportedError("K is infinite");
    std::size_t n = 1;
    for (const auto& g : gens_) n *= static_cast<std::size_t>(g.torsion);
    return n;
}

KElement GroupQuotient::generator(std::size_t i) const {
    KElement k = zero();
    k.at(i) = 1;
    return reduce(k);
}

KElement GroupQuotient::reduce(KElement k) const {
    if (k.size() != gens_.size()) throw Error("group element has the wrong number of components");
    for (std::size_t i = 0; i < k.size(); ++i) {
        const long m = gens_[i].torsion;
        if (m > 0) k[i] = ((k[i] % m) + m) % m;
    }
    return k;
}

KElement GroupQuotient::add(const KElement& x, const KElement& y) const {
    KElement out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y.at(i);
    return reduce(out);
}

KElement GroupQuotient::neg(const KElement& x) const {
    KElement out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
    return reduce(out);
}

AffineMap GroupQuotient::action(const KElement& k) const {
    const KElement r = reduce(k);
    AffineMap out = AffineMap::identity(static_cast<std::size_t>(dim_));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        AffineMap step = r[i] > 0 ? gens_[i].map : gens_[i].map.inverse();
        for (long t = 0; t < std::labs(r[i]); ++t) out = out.then(step);
    }
    return out;
}

std::vector<KElement> GroupQuotient::elements() const {
    const std::size_t total = order();
    std::vector<KElement> out;
    out.reserve(total);
    KElement k = zero();
    for (std::size_t n = 0; n < total; ++n) {
        out.push_back(k);
        for (std::size_t i = k.size(); i-- > 0;) {
            if (++k[i] < gens_[i].torsion) break;
            k[i] = 0;
        }
    }
    return out;
}

std::vector<KElement> GroupQuotient::connecting_elements(const ScalarVector& y, const ScalarVector& y2) const {
    std::vector<KElement> out;
    if (finite()) {
        for (const auto& k : elements())
            if (act_point(y, k) == y2) out.push_back(k);
        return out;
    }
    for (const auto& g : gens_)
        if (!(g.map.A == ScalarMatrix::identity(static_cast<std::size_t>(dim_))))
            throw UnsupportedError("fiber test for infinite K needs a translation action");
    // Solve sum k_i b_i = y2 - y over Q after clearing denominators and splitting powers of a.
    const std::size_t n = static_cast<std::size_t>(dim_), r = gens_.size();
    ScalarVector diff(n);
    for (std::size_t j = 0; j < n; ++j) diff[j] = y2.at(j) - y.at(j);
    RatPoly common(1);
    auto absorb = [&](const Scalar& s) {
        const RatPoly& d = s.denominator();
        RatPoly g = RatPoly::gcd(common, d);
        common = RatPoly::divmod(common * d, g).first;
    };
    for (std::size_t j = 0; j < n; ++j) {
        absorb(diff[j]);
        for (const auto& g : gens_) absorb(g.map.b[j]);
    }
    auto cleared = [&](const Scalar& s) { return RatPoly::divmod(s.numerator() * common, s.denominator()).first; };
    std::vector<std::vector<ScalarVector>> rows; // per coordinate, per power
    std::size_t width = 0;
    for (std::size_t j = 0; j < n; ++j) {
        width = std::max(width, cleared(diff[j]).coeffs().size());
        for (const auto& g : gens_) width = std::max(width, cleared(g.map.b[j]).coeffs().size());
    }
    ScalarMatrix M(n * width, r);
    ScalarVector rhs(n * width);
    for (std::size_t j = 0; j < n; ++j) {
        RatPoly d = cleared(diff[j]);
        for (std::size_t p = 0; p < width; ++p) {
            rhs[j * width + p] = Scalar(d.coeff(p));
            for (std::size_t i = 0; i < r; ++i) M(j * width + p, i) = Scalar(cleared(gens_[i].map.b[j]).coeff(p));
        }
    }
    auto sol = solve(M, rhs);
    if (!sol) return out;
    KElement k(r);
    for (std::size_t i = 0; i < r; ++i) {
        const Scalar& v = (*sol)[i];
        if (!v.is_integer()) return out;
        k[i] = v.to_rational().get_num().get_si();
    }
    if (act_point(y, k) == y2) out.push_back(k);
    return out;
}

QuotientPoint GroupQuotient::degeneracy(const QuotientPoint& p, int i) const {
    const auto k = static_cast<int>(p.kappas.size());
    if (i < 0 || i > k || k == 0)
        throw DegreeError("face index " + std::to_string(i) + " out of range in degree " + std::to_string(k));
    QuotientPoint out;
    if (i == 0) {
        out.y = act_point(p.y, p.kappas[0]);
        for (int j = 1; j < k; ++j) out.kappas.push_back(sub(p.kappas[static_cast<std::size_t>(j)], p.kappas[0]));
    } else {
        out.y = p.y;
        out.kappas = p.kappas;
        out.kappas.erase(out.kappas.begin() + (i - 1));
    }
    return out;
}

// ---------------------------------------------------------------------------

const FiniteNerve& Presentation::nerve() const {
    if (auto p = std::get_if<FiniteNerve>(&data_)) return *p;
    throw CompatibilityError("presentation " + id_ + " is not a nerve");
}

const GroupQuotient& Presentation::quotient() const {
    if (auto p = std::get_if<GroupQuotient>(&data_)) return *p;
    throw CompatibilityError("presentation " + id_ + " is not a group quotient");
}

int Presentation::k_max() const { return is_nerve() ? nerve().k_max() : quotient().k_max(); }

// ---------------------------------------------------------------------------

PresentationMorphism PresentationMorphism::nerve_map(PresentationPtr source, PresentationPtr target,
                                                     std::vector<int> index_map) {
    const FiniteNerve& s = source->nerve();
    const FiniteNerve& t = target->nerve();
    if (index_map.size() != s.num_charts()) throw CompatibilityError("index map needs one entry per source chart");
    for (int v : index_map)
        if (v < 0 || v >= static_cast<int>(t.num_charts())) throw CompatibilityError("index map leaves the target charts");
    for (const auto& simplex : s.alive_simplices()) {
        Tuple image;
        for (int c : simplex) image.push_back(index_map[static_cast<std::size_t>(c)]);
        if (!t.tuple_alive(image))
            throw CompatibilityError("index map sends alive simplex " + simplex_str(simplex) + " to a dead tuple");
    }
    PresentationMorphism m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.index_map_ = std::move(index_map);
    return m;
}

PresentationMorphism PresentationMorphism::quotient_map(PresentationPtr source, PresentationPtr target,
                                                        AffineMap domain_map, std::vector<KElement> generator_images) {
    const GroupQuotient& s = source->quotient();
    const GroupQuotient& t = target->quotient();
    if (domain_map.source_dim() != static_cast<std::size_t>(s.dim()) ||
        domain_map.target_dim() != static_cast<std::size_t>(t.dim()) ||
        domain_map.b.size() != static_cast<std::size_t>(t.dim()))
        throw CompatibilityError("domain map has the wrong shape");
    if (generator_images.size() != s.rank()) throw CompatibilityError("need one image per source generator");
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (generator_images[i].size() != t.rank()) throw CompatibilityError("generator image has the wrong length");
        generator_images[i] = t.reduce(generator_images[i]);
        const AffineMap lhs = s.generators()[i].map.then(domain_map);
        const AffineMap rhs = domain_map.then(t.action(generator_images[i]));
        if (!(lhs == rhs))
            throw CompatibilityError("domain map does not intertwine generator g" + std::to_string(i + 1));
        const long m = s.generators()[i].torsion;
        if (m > 0) {
            KElement img = generator_images[i];
            for (auto& v : img) v *= m;
            if (t.reduce(img) != t.zero())
                throw CompatibilityError("torsion of g" + std::to_string(i + 1) + " is not respected");
        }
    }
    PresentationMorphism m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.domain_map_ = std::move(domain_map);
    m.gen_images_ = std::move(generator_images);
    return m;
}

PresentationMorphism PresentationMorphism::identity(PresentationPtr p) {
    if (p->is_nerve()) {
        std::vector<int> idx(p->nerve().num_charts());
        std::iota(idx.begin(), idx.end(), 0);
        return nerve_map(p, p, std::move(idx));
    }
    const auto& q = p->quotient();
    std::vector<KElement> imgs;
    for (std::size_t i = 0; i < q.rank(); ++i) imgs.push_back(q.generator(i));
    return quotient_map(p, p, AffineMap::identity(static_cast<std::size_t>(q.dim())), std::move(imgs));
}

bool PresentationMorphism::is_refinement() const {
    if (!source_->is_nerve()) return source_ == target_ || *source_ == *target_;
    const auto& s = source_->nerve().supports();
    const auto& t = target_->nerve().supports();
    if (!s || !t) return false;
    if (s->adjacency != t->adjacency) return false;
    for (std::size_t c = 0; c < index_map_.size(); ++c) {
        const auto& inner = s->chart_atoms[c];
        const auto& outer = t->chart_atoms[static_cast<std::size_t>(index_map_[c])];
        if (!std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) return false;
    }
    return true;
}

bool PresentationMorphism::ev_compatible() const {
    if (source_->is_nerve() && source_->nerve().supports() && target_->nerve().supports()) return is_refinement();
    return true;
}

Tuple PresentationMorphism::map_tuple(const Tuple& t) const {
    Tuple out;
    out.reserve(t.size());
    for (int c : t) out.push_back(index_map_.at(static_cast<std::size_t>(c)));
    return out;
}

KElement PresentationMorphism::map_element(const KElement& k) const {
    const auto& t = target_->quotient();
    KElement out = t.zero();
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += k[i] * gen_images_[i][j];
    return t.reduce(out);
}

// ---------------------------------------------------------------------------

namespace {

/// Morphism between two presentations holding identical data.
PresentationMorphism same_data(const PresentationPtr& s, const PresentationPtr& t) {
    if (s->is_nerve()) {
        std::vector<int> idx(s->nerve().num_charts());
        std::iota(idx.begin(), idx.end(), 0);
        return PresentationMorphism::nerve_map(s, t, std::move(idx));
    }
    const auto& q = s->quotient();
    std::vector<KElement> imgs;
    for (std::size_t i = 0; i < q.rank(); ++i) imgs.push_back(q.generator(i));
    return PresentationMorphism::quotient_map(s, t, AffineMap::identity(static_cast<std::size_t>(q.dim())),
                                              std::move(imgs));
}

} // namespace

CommonRefinement common_refinement(const PresentationPtr& q, const PresentationPtr& r) {
    if (q == r || *q == *r) return {q, PresentationMorphism::identity(q), same_data(q, r)};
    if (!q->is_nerve() || !r->is_nerve())
        throw CompatibilityError("common refinement of distinct quotient presentations is not supported");
    const FiniteNerve& a = q->nerve();
    const FiniteNerve& b = r->nerve();
    if (a.num_charts() == 1 && b.num_charts() == 1)
        return {q, PresentationMorphism::identity(q), PresentationMorphism::nerve_map(q, r, {0})};
    if (!a.supports() || !b.supports())
        throw CompatibilityError("common refinement needs chart supports on both presentations");
    const Supports& sa = *a.supports();
    const Supports& sb = *b.supports();
    if (sa.adjacency != sb.adjacency) throw CompatibilityError("presentations are built on different atoms");

    std::vector<std::string> names;
    Supports sup{{}, sa.adjacency};
    std::vector<int> to_a, to_b;
    for (std::size_t i = 0; i < a.num_charts(); ++i)
        for (std::size_t j = 0; j < b.num_charts(); ++j) {
            auto comps = components_of(intersect(sa.chart_atoms[i], sb.chart_atoms[j]), sa);
            for (std::size_t c = 0; c < comps.size(); ++c) {
                std::string name = a.charts()[i] + "&" + b.charts()[j];
                if (comps.size() > 1) name += "#" + std::to_string(c);
                names.push_back(name);
                sup.chart_atoms.push_back(comps[c]);
                to_a.push_back(static_cast<int>(i));
                to_b.push_back(static_cast<int>(j));
            }
        }
    FiniteNerve s = FiniteNerve::from_supports(names, sup, std::min(a.k_max(), b.k_max()), a.alternating());
    for (const auto& simplex : s.alive_simplices()) {
        std::vector<int> common = sup.chart_atoms[static_cast<std::size_t>(simplex[0])];
        for (std::size_t i = 1; i < simplex.size(); ++i)
            common = intersect(common, sup.chart_atoms[static_cast<std::size_t>(simplex[i])]);
        if (!connected(common, sup))
            throw CompatibilityError("common refinement is not a good cover: intersection " + simplex_str(simplex) +
                                     " is disconnected");
    }
    auto sp = make_presentation(std::move(s), "refine(" + q->id() + "," + r->id() + ")");
    return {sp, PresentationMorphism::nerve_map(sp, q, to_a), PresentationMorphism::nerve_map(sp, r, to_b)};
}

} // namespace diffcech
