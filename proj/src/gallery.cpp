#include "diffcech/gallery.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/sampling.hpp"

#include <algorithm>
#include <set>

namespace diffcech {

namespace gallery {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

/// Atoms are the 12 points of a cycle; chart i covers `members(i)`.
Supports cyclic_supports(int charts, const std::function<std::vector<int>(int)>& members) {
    Supports s;
    for (int i = 0; i < charts; ++i) {
        std::vector<int> atoms;
        for (int a : members(i)) atoms.push_back(((a % 12) + 12) % 12);
        std::sort(atoms.begin(), atoms.end());
        s.chart_atoms.push_back(atoms);
    }
    for (int a = 0; a < 12; ++a) {
        std::vector<int> adj{(a + 11) % 12, (a + 1) % 12};
        std::sort(adj.begin(), adj.end());
        s.adjacency.push_back(adj);
    }
    return s;
}

/// Atoms are the simplices of a complex (open cells); vertex stars are the charts.
Supports star_supports(int vertices, const std::vector<Simplex>& facets) {
    std::set<Simplex> cells;
    for (const auto& f : facets) {
        const std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) s.push_back(f[i]);
            cells.insert(s);
        }
    }
    std::vector<Simplex> atoms(cells.begin(), cells.end());
    Supports out;
    out.chart_atoms.resize(static_cast<std::size_t>(vertices));
    out.adjacency.resize(atoms.size());
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        for (int v : atoms[a]) out.chart_atoms[static_cast<std::size_t>(v)].push_back(static_cast<int>(a));
        for (std::size_t b = 0; b < atoms.size(); ++b) {
            const auto& x = atoms[a];
            const auto& y = atoms[b];
            const bool face = (x.size() + 1 == y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end())) ||
                              (y.size() + 1 == x.size() && std::includes(x.begin(), x.end(), y.begin(), y.end()));
            if (face) out.adjacency[a].push_back(static_cast<int>(b));
        }
    }
    return out;
}

GroupQuotient translations(const std::vector<Scalar>& shifts, bool free, int degree) {
    std::vector<QuotientGenerator> gens;
    for (const auto& s : shifts) gens.push_back({0, AffineMap::translation({s})});
    return GroupQuotient(1, std::move(gens), free, degree);
}

} // namespace

PresentationPtr point(bool alternating) {
    Supports s{{{0}}, {{}}};
    return make_presentation(FiniteNerve::from_supports({"U"}, s, kNerveKmax, alternating), "point");
}

PresentationPtr circle3(bool alternating) {
    auto arc = [](int i) {
        std::vector<int> m;
        for (int a = 4 * i - 3; a <= 4 * i + 3; ++a) m.push_back(a);
        return m;
    };
    return make_presentation(
        FiniteNerve::from_supports(numbered("arc", 3), cyclic_supports(3, arc), kNerveKmax, alternating), "circle3");
}

PresentationPtr circle6(bool alternating) {
    auto star = [](int j) { return std::vector<int>{2 * j - 1, 2 * j, 2 * j + 1}; };
    return make_presentation(
        FiniteNerve::from_supports(numbered("star", 6), cyclic_supports(6, star), kNerveKmax, alternating), "circle6");
}

PresentationPtr torus9(bool alternating) {
    auto v = [](int i, int j) { return 3 * (((i % 3) + 3) % 3) + ((j % 3) + 3) % 3; };
    std::vector<Simplex> facets;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Simplex a{v(i, j), v(i + 1, j), v(i + 1, j + 1)}, b{v(i, j), v(i, j + 1), v(i + 1, j + 1)};
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            facets.push_back(a);
            facets.push_back(b);
        }
    return make_presentation(
        FiniteNerve::from_supports(numbered("v", 9), star_supports(9, facets), kNerveKmax, alternating), "torus9");
}

PresentationPtr rp2(bool alternating) {
    const std::vector<Simplex> facets{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
    return make_presentation(
        FiniteNerve::from_supports(numbered("v", 6), star_supports(6, facets), kNerveKmax, alternating), "rp2");
}

PresentationPtr irrational_torus(int degree) {
    return make_presentation(translations({Scalar(1), Scalar::alpha()}, true, degree), "irrational-torus");
}

PresentationPtr z2_reflection(int degree) {
    AffineMap flip{ScalarMatrix::from_rows({{Scalar(-1)}}, 1), {Scalar(0)}};
    return make_presentation(GroupQuotient(1, {{2, flip}}, false, degree), "z2-reflection");
}

PresentationPtr circle_quotient(int degree) {
    return make_presentation(translations({Scalar(1)}, true, degree), "circle-quotient");
}

PresentationPtr line(int degree) { return make_presentation(translations({}, true, degree), "line"); }

Cochain winding_cocycle(const PresentationPtr& c3, long n, const GroupTag& tag) {
    const FiniteNerve& nerve = c3->nerve();
    std::vector<GroupElement> vals;
    for (const auto& t : nerve.tuples(1)) {
        mpz_class v = 0;
        if (t == Tuple{2, 0}) v = n;
        if (t == Tuple{0, 2}) v = -n;
        vals.push_back(GroupElement::integer(tag, v));
    }
    return Cochain::nerve(c3, tag, 1, std::move(vals));
}

Cochain irrational_torus_cocycle(const PresentationPtr& torus) {
    return Cochain::crossed(torus, {MPoly(), MPoly(Scalar::alpha())});
}

PresentationMorphism circle_refinement(const PresentationPtr& c6, const PresentationPtr& c3) {
    return PresentationMorphism::nerve_map(c6, c3, {0, 0, 1, 1, 2, 2});
}

PresentationMorphism circle_double_cover(const PresentationPtr& c6, const PresentationPtr& c3) {
    return PresentationMorphism::nerve_map(c6, c3, {0, 1, 2, 0, 1, 2});
}

PresentationMorphism line_into_torus(const PresentationPtr& l, const PresentationPtr& torus) {
    return PresentationMorphism::quotient_map(l, torus, AffineMap::identity(1), {});
}

} // namespace gallery

namespace {

const GroupTag Z = GroupTag::integers();
const GroupTag R = GroupTag::reals();

} // namespace

std::vector<std::string> gallery_names() {
    return {"point",          "circle3",          "circle6",         "torus9",
            "rp2",            "irrational-torus", "z2-reflection",   "circle-quotient",
            "line",           "circle3-winding1", "circle3-trivial", "irrational-torus-bundle"};
}

GalleryEntry gallery_entry(const std::string& name) {
    GalleryEntry e;
    e.name = name;
    if (name == "point") {
        e.description = "a single chart";
        e.presentation = gallery::point();
        e.advertised = {{0, Z, "Z"}, {1, Z, "0"}};
    } else if (name == "circle3") {
        e.description = "circle covered by three arcs";
        e.presentation = gallery::circle3();
        e.advertised = {{0, Z, "Z"}, {1, Z, "Z"}, {1, GroupTag::cyclic(2), "Z/2"}};
    } else if (name == "circle6") {
        e.description = "circle covered by six arcs, refining circle3";
        e.presentation = gallery::circle6();
        e.advertised = {{0, Z, "Z"}, {1, Z, "Z"}};
    } else if (name == "torus9") {
        e.description = "torus covered by the nine vertex stars of an 18-triangle triangulation";
        e.presentation = gallery::torus9();
        e.advertised = {{0, Z, "Z"}, {1, Z, "Z^2"}, {2, Z, "Z"}};
    } else if (name == "rp2") {
        e.description = "projective plane covered by the six vertex stars of its minimal triangulation";
        e.presentation = gallery::rp2();
        e.advertised = {{1, Z, "0"}, {2, Z, "Z/2"}, {1, GroupTag::cyclic(2), "Z/2"}};
    } else if (name == "irrational-torus") {
        e.description = "R/(Z + aZ) with polynomial functions of degree <= 3";
        e.presentation = gallery::irrational_torus();
        e.advertised = {{0, R, "R"}, {1, R, "R"}};
    } else if (name == "z2-reflection") {
        e.description = "R/{±1}, the reflection orbifold";
        e.presentation = gallery::z2_reflection();
        e.advertised = {{0, R, "R^2"}, {1, R, "0"}, {2, R, "0"}};
    } else if (name == "circle-quotient") {
        e.description = "R/Z by translation";
        e.presentation = gallery::circle_quotient();
        e.advertised = {{0, R, "R"}, {1, R, "0"}};
    } else if (name == "line") {
        e.description = "R with the trivial group";
        e.presentation = gallery::line();
        e.advertised = {{0, R, "R^4"}, {1, R, "0"}};
    } else if (name == "circle3-winding1") {
        e.description = "Z-bundle over circle3 with winding number 1";
        e.presentation = gallery::circle3();
        e.cocycle = gallery::winding_cocycle(e.presentation, 1);
    } else if (name == "circle3-trivial") {
        e.description = "trivial Z-bundle over circle3";
        e.presentation = gallery::circle3();
        e.cocycle = Cochain::zero(e.presentation, Z, 1);
    } else if (name == "irrational-torus-bundle") {
        e.description = "R-bundle R^2 -> R/(Z + aZ) with kappa(m + n a) = n a";
        e.presentation = gallery::irrational_torus();
        e.cocycle = gallery::irrational_torus_cocycle(e.presentation);
    } else {
        throw ParseError("gallery", "unknown gallery entry \"" + name + "\"");
    }
    return e;
}

VerifyResult verify_entry(const GalleryEntry& e, std::uint64_t seed) {
    VerifyResult out;
    Rng rng(seed);
    auto record = [&out](bool ok, const std::string& what) {
        out.ok = out.ok && ok;
        out.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    };
    const PresentationPtr& p = e.presentation;
    record(true, "presentation validates");
    const GroupTag tag = p->is_nerve() ? Z : R;
    for (int k = 0; k <= 2; ++k) {
        bool ok = true;
        for (int t = 0; t < 5 && ok; ++t) ok = vanishes(coboundary(coboundary(random_cochain(p, tag, k, rng))), rng, 20);
        record(ok, "∂∂ = 0 on random degree-" + std::to_string(k) + " cochains");
    }
    for (const auto& a : e.advertised) {
        const std::string got = cohomology(p, a.coeff, a.degree).summary();
        record(got == a.summary, "H^" + std::to_string(a.degree) + "(" + a.coeff.str() + ") = " + got +
                                     (got == a.summary ? "" : ", expected " + a.summary));
    }
    if (e.cocycle) {
        auto chk = is_cocycle(*e.cocycle, seed);
        record(chk.ok, "defining cochain is a cocycle");
    }
    return out;
}

} // namespace diffcech
