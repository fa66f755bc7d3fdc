#include "fixtures.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/io.hpp"
#include "diffcech/sampling.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace diffcech;

namespace {

const GroupTag Z = GroupTag::integers();
const GroupTag R = GroupTag::reals();

std::string temp_file(const std::string& name, const std::string& text) {
    const std::string path = std::string(P_tmpdir) + "/diffcech_io_" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("malformed JSON names line and column") {
    try {
        parse_json_text("{\n  \"a\": 1,\n  oops\n}", "doc.json");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("doc.json:3:") != std::string::npos);
    }
    CHECK_THROWS_AS(load_document("/nonexistent/file.json"), ParseError);
    CHECK_THROWS_AS(load_document("gallery:nowhere"), ParseError);
}

TEST_CASE("nerve cochain round trip") {
    Rng rng(5);
    for (const auto& p : {gallery::circle3(), gallery::torus9(false)}) {
        for (int k = 0; k <= 2; ++k) {
            const Cochain c = random_cochain(p, Z, k, rng);
            const Json j = cochain_to_json(c);
            CHECK(cochain_from_json(j, p, Z, "mem") == c);
        }
    }
    const Cochain w = gallery::winding_cocycle(gallery::circle3(), 1);
    const Json j = cochain_to_json(w);
    CHECK(j["degree"] == 1);
    CHECK(j["values"]["(2,0)"] == "1");
    CHECK(j["values"].size() == 2);
}

TEST_CASE("quotient cochain round trip") {
    Rng rng(6);
    const auto z2 = gallery::z2_reflection();
    for (int k = 0; k <= 2; ++k) {
        const Cochain c = random_cochain(z2, R, k, rng);
        CHECK(cochain_from_json(cochain_to_json(c), z2, R, "mem") == c);
    }
    const auto t = gallery::irrational_torus();
    const Cochain f = gallery::irrational_torus_cocycle(t);
    const Json j = cochain_to_json(f);
    CHECK(j.contains("crossed"));
    CHECK(cochain_from_json(j, t, R, "mem") == f);
    const CrossedHom beta = crossed_from_cocycle(f);
    CHECK(crossed_from_json(crossed_to_json(beta), t, "mem") == beta);
}

TEST_CASE("bundle documents") {
    const GalleryEntry e = gallery_entry("circle3-winding1");
    const std::string path = temp_file("winding.json", bundle_to_json(BundlePresentation(*e.cocycle)).dump(2));
    const Document d = load_document(path);
    CHECK(d.is_bundle);
    REQUIRE(d.group);
    CHECK(*d.group == Z);
    REQUIRE(d.cochain);
    CHECK(*d.cochain == *e.cocycle);
    std::remove(path.c_str());

    const Document g = load_document("gallery:irrational-torus-bundle");
    REQUIRE(g.cochain);
    CHECK(g.cochain->degree() == 1);

    const std::string bad = temp_file("bad.json", R"js({"base": "gallery:circle3", "group": "Z", "cocycle": {"degree": 1, "values": {"(0,7)": "1"}}})js");
    CHECK_THROWS_AS(load_document(bad), ParseError);
    std::remove(bad.c_str());
}

TEST_CASE("presentation documents") {
    const auto c = gallery::circle6();
    const std::string path = temp_file("c6.json", presentation_to_json(*c).dump());
    const Document d = load_document(path);
    CHECK_FALSE(d.cochain);
    CHECK(canonical_text(*d.presentation) == canonical_text(*c));
    std::remove(path.c_str());
}
