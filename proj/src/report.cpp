#include "diffcech/report.hpp"

#include <sstream>

namespace diffcech {

namespace {

std::string coords_str(const std::vector<Scalar>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + "]";
}

} // namespace

std::string brief(const Cochain& c, std::size_t limit) {
    std::vector<std::string> parts;
    std::size_t total = 0;
    if (c.on_nerve()) {
        const auto& ts = c.presentation()->nerve().tuples_unchecked(c.degree());
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (!c.values()[i].is_zero()) {
                if (parts.size() < limit) parts.push_back(tuple_str(ts[i]) + "=" + c.values()[i].str());
                ++total;
            }
    } else {
        const GroupQuotient& q = c.presentation()->quotient();
        if (c.degree() == 0) return c.component({}).str();
        if (q.finite()) {
            for (const auto& ks : all_kappas(q, c.degree())) {
                const MPoly v = c.component(ks);
                if (v.is_zero()) continue;
                if (parts.size() < limit) parts.push_back(kappas_str(ks) + ": " + v.str());
                ++total;
            }
        } else {
            for (std::size_t i = 0; i < q.rank(); ++i) {
                parts.push_back("g" + std::to_string(i + 1) + ": " + c.component({q.generator(i)}).str());
                ++total;
            }
        }
    }
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += ", " + parts[i];
    if (total > parts.size()) s += ", ... (" + std::to_string(total) + " nonzero)";
    return s;
}

bool is_cycle_nerve(const FiniteNerve& n) {
    const std::size_t m = n.num_charts();
    if (m < 3) return false;
    std::vector<int> degree(m, 0);
    for (const auto& s : n.alive_simplices()) {
        if (s.size() > 2) return false;
        ++degree[static_cast<std::size_t>(s[0])];
        ++degree[static_cast<std::size_t>(s[1])];
    }
    for (int d : degree)
        if (d != 2) return false;
    const auto comps = n.components();
    for (int c : comps)
        if (c != comps[0]) return false;
    return true;
}

std::string render_cohomology(const CohomologyReport& r, const Presentation& p) {
    std::ostringstream out;
    out << "H^" << r.degree << " = " << r.summary();
    if (!r.class_note.empty()) out << " " << r.class_note;
    const bool winding = p.is_nerve() && r.degree == 1 && r.generators.size() == 1 && is_cycle_nerve(p.nerve());
    if (winding) {
        out << ", generator: winding cocycle\n";
    } else if (r.generators.size() == 1) {
        out << ", generator: " << brief(r.generators[0]) << "\n";
    } else {
        out << "\n";
        for (std::size_t i = 0; i < r.generators.size(); ++i) {
            out << "generator " << i + 1;
            if (!r.over_field) out << " (order " << (r.orders[i] == 0 ? std::string("infinite") : r.orders[i].get_str()) << ")";
            out << ": " << brief(r.generators[i]) << "\n";
        }
    }
    if (winding) out << "representative: " << brief(r.generators[0]) << "\n";
    out << "presentation: " << (p.id().empty() ? std::string("(inline)") : p.id()) << "\n";
    out << "coefficients: " << r.coeff.str() << "\n";
    if (!r.description.empty()) out << "global sections: " << r.description << "\n";
    return out.str();
}

std::string render_trivialization(const Trivialization& t, const BundlePresentation& b) {
    std::ostringstream out;
    if (t.trivial) {
        out << "trivial\n";
        out << "witness: alpha = " << brief(*t.witness) << "\n";
        out << "section: " << t.certificate << "\n";
        return out.str();
    }
    if (b.base()->is_quotient()) {
        out << t.certificate << "\n";
        out << "representative: " << brief(b.cocycle()) << "\n";
        return out.str();
    }
    const CohomologyReport r = cohomology(b.base(), b.group(), 1);
    out << "nontrivial\n";
    out << "class: " << coords_str(r.coordinates(b.cocycle())) << " in H^1 = " << r.summary() << "\n";
    out << "representative: " << brief(b.cocycle()) << "\n";
    return out.str();
}

std::string render_isomorphism(const BundleIsomorphism& iso) {
    std::ostringstream out;
    if (iso.isomorphic) {
        out << "isomorphic\n";
        out << "alpha: " << brief(*iso.alpha) << " (f2 - f1 = ∂alpha, map [y,g] -> [y,g-alpha(y)])\n";
    } else {
        out << "distinct\n";
        out << "certificate: " << iso.certificate << "\n";
    }
    return out.str();
}

std::string render_homotopy(const Homotopy& h, const Cochain& f) {
    std::ostringstream out;
    out << "g = " << brief(h.g) << "\n";
    out << "∂g = " << (f.degree() % 2 ? "-f" : "f") << (h.verified ? " verified" : " FAILED") << "\n";
    if (h.verified) out << "class of f is zero in H^" << f.degree() << "\n";
    return out.str();
}

std::string render_verify(const GalleryEntry& e, const VerifyResult& v) {
    std::ostringstream out;
    out << e.name << ": " << (v.ok ? "ok" : "FAILED") << "\n";
    for (const auto& l : v.lines) out << "  " << l << "\n";
    return out.str();
}

} // namespace diffcech
