#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(DIFFCECH_CLI) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
    const int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& t) { return s.find(t) != std::string::npos; }

} // namespace

TEST_CASE("cli cohomology") {
    const Run r = run("cohomology --degree 1 --coeff Z gallery:circle3");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("H^1 = Z, generator: winding cocycle", 0) == 0);
    CHECK(run("cohomology --degree 2 --coeff Z gallery:rp2").out.rfind("H^2 = Z/2", 0) == 0);
    CHECK(run("cohomology --degree 1 --coeff R gallery:irrational-torus").out.rfind("H^1 = R", 0) == 0);
    CHECK(run("cohomology --degree 0 --coeff Z gallery:circle6").out.rfind("H^0 = Z", 0) == 0);
}

TEST_CASE("cli bundles") {
    const Run c = run("classify-bundle gallery:irrational-torus-bundle");
    CHECK(c.code == 0);
    CHECK(contains(c.out, "nontrivial in class D=3"));
    CHECK(contains(run("classify-bundle gallery:circle3-trivial").out, "trivial"));
    const Run d = run("isomorphic gallery:circle3-trivial gallery:circle3-winding1");
    CHECK(d.code == 1);
    CHECK(contains(d.out, "distinct"));
    const Run same = run("isomorphic gallery:circle3-winding1 gallery:circle3-winding1");
    CHECK(same.code == 0);
    CHECK(contains(same.out, "isomorphic"));
}

TEST_CASE("cli exit codes") {
    CHECK(run("cohomology --degree 1 --coeff Z /nonexistent.json").code == 2);
    CHECK(run("cohomology --degree 1 --coeff W gallery:circle3").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("check-cocycle gallery:circle3-winding1").code == 0);
    CHECK(run("gallery verify circle3").code == 0);
    CHECK(run("gallery show nowhere").code == 2);
}

TEST_CASE("cli seed echo and determinism") {
    const Run a = run("check-cocycle gallery:irrational-torus-bundle");
    CHECK(contains(a.out, "seed: 1729"));
    const Run b = run("check-cocycle gallery:irrational-torus-bundle");
    CHECK(a.out == b.out);
    const Run s = run("gallery verify irrational-torus");
    CHECK(contains(s.out, "seed: 1729"));
}
