// diffcech: Čech cohomology and bundle classification from the command line.

#include "diffcech/average.hpp"
#include "diffcech/errors.hpp"
#include "diffcech/gallery.hpp"
#include "diffcech/io.hpp"
#include "diffcech/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace diffcech;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::uint64_t probe_seed() {
    if (const char* s = std::getenv("DIFFCECH_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ParseError("DIFFCECH_SEED", "expected a non-negative integer");
        }
    }
    return kDefaultSeed;
}

Cochain require_cochain(const Document& d) {
    if (!d.cochain) throw ParseError(d.source, "expected a cochain or bundle document");
    return *d.cochain;
}

int cmd_cohomology(int degree, const std::string& coeff, const std::string& file) {
    const Document d = load_document(file);
    const GroupTag tag = GroupTag::parse(coeff);
    const CohomologyReport r = degree == 0 ? h0_global_sections(d.presentation, tag) : cohomology(d.presentation, tag, degree);
    std::cout << render_cohomology(r, *d.presentation);
    return kOk;
}

int cmd_check_cocycle(const std::string& file, std::uint64_t seed) {
    const Cochain c = require_cochain(load_document(file));
    const CocycleCheck chk = is_cocycle(c, seed);
    if (chk) std::cout << "cocycle: yes (degree " << c.degree() << ", " << c.tag().str() << ")\n";
    else std::cout << "not a cocycle: ∂c is nonzero at " << chk.counterexample << "\n";
    std::cout << "seed: " << seed << "\n";
    return chk ? kOk : kNegative;
}

int cmd_coboundary(const std::string& file) {
    const Cochain c = require_cochain(load_document(file));
    std::cout << cochain_to_json(coboundary(c)).dump(2) << "\n";
    return kOk;
}

int cmd_classify(const std::string& file, std::uint64_t seed) {
    const BundlePresentation b(require_cochain(load_document(file)), seed);
    std::cout << render_trivialization(is_trivializable(b), b);
    std::cout << "seed: " << seed << "\n";
    return kOk;
}

int cmd_isomorphic(const std::string& f1, const std::string& f2, std::uint64_t seed) {
    const BundlePresentation b1(require_cochain(load_document(f1)), seed);
    const BundlePresentation b2(require_cochain(load_document(f2)), seed);
    const BundleIsomorphism iso = isomorphic(b1, b2);
    std::cout << render_isomorphism(iso);
    std::cout << "seed: " << seed << "\n";
    return iso.isomorphic ? kOk : kNegative;
}

int cmd_bockstein(const std::string& ses_text, const std::string& file) {
    const CoefficientSES ses = CoefficientSES::parse(ses_text);
    const Cochain c = require_cochain(load_document(file));
    const Cochain image = connecting_map(ses, c);
    const CohomologyReport r = cohomology(image.presentation(), ses.a, image.degree());
    std::cout << "sequence: 0 -> " << ses.a.str() << " -> " << ses.b.str() << " -> " << ses.c.str() << " -> 0\n";
    std::cout << "delta[c] = " << brief(image) << "\n";
    std::cout << "class in H^" << image.degree() << "(" << ses.a.str() << ") = " << r.summary() << ": ";
    if (r.class_is_zero(image)) std::cout << "zero\n";
    else {
        std::cout << "nonzero, coordinates [";
        const auto xs = r.coordinates(image);
        for (std::size_t i = 0; i < xs.size(); ++i) std::cout << (i ? "," : "") << xs[i].str();
        std::cout << "]\n";
    }
    return kOk;
}

int cmd_average(const std::string& file) {
    const Cochain f = require_cochain(load_document(file));
    const Homotopy h = trivializing_homotopy(f);
    std::cout << render_homotopy(h, f);
    return h.verified ? kOk : kNegative;
}

int cmd_gallery_list() {
    for (const auto& name : gallery_names()) std::cout << name << "  " << gallery_entry(name).description << "\n";
    return kOk;
}

int cmd_gallery_show(const std::string& name) {
    const GalleryEntry e = gallery_entry(name);
    if (e.cocycle) std::cout << bundle_to_json(BundlePresentation(*e.cocycle)).dump(2) << "\n";
    else std::cout << canonical_text(*e.presentation) << "\n";
    return kOk;
}

int cmd_gallery_verify(const std::string& name, std::uint64_t seed) {
    bool ok = true;
    const std::vector<std::string> names = name.empty() ? gallery_names() : std::vector<std::string>{name};
    for (const auto& n : names) {
        const GalleryEntry e = gallery_entry(n);
        const VerifyResult v = verify_entry(e, seed);
        ok = ok && v.ok;
        std::cout << render_verify(e, v);
    }
    std::cout << "seed: " << seed << "\n";
    return ok ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Čech cohomology of finitely presented diffeological spaces"};
    app.require_subcommand(1);

    int degree = 1;
    std::string coeff = "Z", file, file2, ses, name;

    auto* coh = app.add_subcommand("cohomology", "compute H^k");
    coh->add_option("--degree", degree, "cohomological degree")->required();
    coh->add_option("--coeff", coeff, "coefficient group: Z, Z/m, Q, R")->required();
    coh->add_option("file", file, "presentation file or gallery:NAME")->required();

    auto* chk = app.add_subcommand("check-cocycle", "test ∂c = 0");
    chk->add_option("file", file)->required();

    auto* cob = app.add_subcommand("coboundary", "print ∂c");
    cob->add_option("file", file)->required();

    auto* cls = app.add_subcommand("classify-bundle", "decide triviality of a bundle");
    cls->add_option("file", file)->required();

    auto* iso = app.add_subcommand("isomorphic", "compare two bundles");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();

    auto* bock = app.add_subcommand("bockstein", "connecting homomorphism of a coefficient sequence");
    bock->add_option("--ses", ses, "e.g. Z->Z->Z/2")->required();
    bock->add_option("file", file)->required();

    auto* avg = app.add_subcommand("average-trivialize", "Haar-averaging homotopy over a finite group");
    avg->add_option("file", file)->required();

    auto* gal = app.add_subcommand("gallery", "built-in spaces");
    gal->require_subcommand(1);
    auto* gl = gal->add_subcommand("list", "list entries");
    auto* gs = gal->add_subcommand("show", "print an entry");
    gs->add_option("name", name)->required();
    auto* gv = gal->add_subcommand("verify", "self-test entries");
    gv->add_option("name", name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const std::uint64_t seed = probe_seed();
        if (coh->parsed()) return cmd_cohomology(degree, coeff, file);
        if (chk->parsed()) return cmd_check_cocycle(file, seed);
        if (cob->parsed()) return cmd_coboundary(file);
        if (cls->parsed()) return cmd_classify(file, seed);
        if (iso->parsed()) return cmd_isomorphic(file, file2, seed);
        if (bock->parsed()) return cmd_bockstein(ses, file);
        if (avg->parsed()) return cmd_average(file);
        if (gl->parsed()) return cmd_gallery_list();
        if (gs->parsed()) return cmd_gallery_show(name);
        if (gv->parsed()) return cmd_gallery_verify(name, seed);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CocycleError& e) {
        std::cout << e.what() << "\n";
        return kNegative;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
