#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsl2/cli.hpp"
#include "qsl2/parse.hpp"
#include "qsl2/tensorop.hpp"
#include "testutil.hpp"

using namespace qsl2;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("normal-form rewrites to the canonical basis") {
    auto r = run({"normal-form", "k*e"});
    CHECK(r.code == 0);
    CHECK(r.out == "t^2*e*k\n");
    CHECK(r.err.empty());

    auto comm = run({"normal-form", "f*e - e*f"});
    CHECK(comm.code == 0);
    CHECK(comm.out == "-t^2/(t^4 - 1)*k^2 + t^2/(t^4 - 1)*k^-2\n");

    // Text output re-parses to the same element.
    std::string body = comm.out.substr(0, comm.out.size() - 1);
    CHECK(parse_element(body) == parse_element("f*e - e*f"));

    auto zero = run({"normal-form", "e-e"});
    CHECK(zero.out == "0\n");
}

TEST_CASE("normal-form json and numeric modes") {
    auto r = run({"normal-form", "k*e", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["input"] == "k*e");
    CHECK(j["element"] == "t^2*e*k");
    CHECK(j["terms"][0]["monomial"] == "e*k");

    auto n = run({"normal-form", "[2]", "--numeric", "2"});
    CHECK(n.code == 0);
    CHECK(n.out == "4.25\n");

    auto nj = run({"normal-form", "[2]+e", "--numeric", "3/2", "--json"});
    CHECK(nj.code == 0);
    auto j2 = nlohmann::json::parse(nj.out);
    bool saw_unit = false;
    for (const auto& term : j2["terms"])
        if (term["monomial"] == "1") {
            saw_unit = true;
            CHECK(term["value"].get<double>() == doctest::Approx(97.0 / 36.0));
        }
    CHECK(saw_unit);
}

TEST_CASE("rep prints matrices in text and json") {
    auto t = run({"rep", "-l", "1/2", "k", "--text"});
    CHECK(t.code == 0);
    CHECK(t.out == "[t, 0]\n[0, t^-1]\n");

    // JSON is the default for structured commands.
    auto j = run({"rep", "-l", "1/2", "e"});
    CHECK(j.code == 0);
    CHECK(j.out.front() == '{');
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["l"] == "1/2");
    CHECK(parsed["rows"].size() == 2);
    CHECK(parsed["rows"][0][1].size() == 1);  // one radical term
    CHECK(parsed["rows"][0][0].empty());      // exact zero is an empty sum

    auto n = run({"rep", "-l", "1/2", "e*f-f*e", "--numeric", "2"});
    CHECK(n.code == 0);
    auto pn = nlohmann::json::parse(n.out);
    CHECK(pn["rows"][0][0].get<double>() == doctest::Approx(1.0));
    CHECK(pn["rows"][1][1].get<double>() == doctest::Approx(-1.0));

    auto nt = run({"rep", "-l", "1", "e*f-f*e", "--numeric", "2", "--text"});
    CHECK(nt.code == 0);
    CHECK(nt.out == "[4.25, 0, 0]\n[0, 0, 0]\n[0, 0, -4.25]\n");
}

TEST_CASE("cg prints the full coupling table") {
    auto r = run({"cg", "-k", "1/2", "-l", "1/2", "--text"});
    CHECK(r.code == 0);
    std::string expected =
        "j=1 m=1:  (1/2,1/2) -> 1\n"
        "j=1 m=0:  (1/2,-1/2) -> t^2/(t^4 + 1)*sqrt(t^4 + 1)"
        "  (-1/2,1/2) -> 1/(t^4 + 1)*sqrt(t^4 + 1)\n"
        "j=1 m=-1:  (-1/2,-1/2) -> 1\n"
        "j=0 m=0:  (1/2,-1/2) -> 1/(t^4 + 1)*sqrt(t^4 + 1)"
        "  (-1/2,1/2) -> -t^2/(t^4 + 1)*sqrt(t^4 + 1)\n";
    CHECK(r.out == expected);

    auto j = run({"cg", "-k", "1/2", "-l", "1/2", "--numeric", "2"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["k"] == "1/2");
    REQUIRE(parsed["blocks"].size() == 4);
    // j=1, m=0 block: values t/sqrt([2]) and t^-1/sqrt([2]) at t=2.
    auto block = parsed["blocks"][1];
    CHECK(block["j"] == "1");
    CHECK(block["m"] == "0");
    CHECK(block["coefficients"][0]["value"].get<double>() ==
          doctest::Approx(2.0 / std::sqrt(4.25)));
    CHECK(block["coefficients"][1]["value"].get<double>() ==
          doctest::Approx(0.5 / std::sqrt(4.25)));

    // Byte-identical across runs.
    auto again = run({"cg", "-k", "1/2", "-l", "1/2", "--numeric", "2"});
    CHECK(again.out == j.out);
}

TEST_CASE("wigner-eckart reports extraction and closed-form comparison") {
    auto ok = run({"wigner-eckart", "-l", "1", "-j", "1/2"});
    CHECK(ok.code == 0);
    auto jok = nlohmann::json::parse(ok.out);
    CHECK(jok["consistent"] == true);
    CHECK(jok["closed_form_match"] == true);
    CHECK(jok["alpha"] == jok["alpha_closed_form"]);

    // For j = 1 the proportionality holds but the quoted closed form differs
    // by sqrt([2j]!), so the comparison honestly fails.
    auto mism = run({"wigner-eckart", "-l", "1", "-j", "1", "--text"});
    CHECK(mism.code == 1);
    CHECK(contains(mism.out, "consistent: true"));
    CHECK(contains(mism.out, "closed form match: false"));

    auto outside = run({"wigner-eckart", "-l", "2", "-j", "1/2"});
    CHECK(outside.code == 4);
    CHECK(contains(outside.err, "error:"));

    auto frac = run({"wigner-eckart", "-l", "3/2", "-j", "1"});
    CHECK(frac.code == 4);
    CHECK(contains(frac.err, "integer"));
}

TEST_CASE("center verifies commutation with every generator") {
    auto r = run({"center", "-j", "1", "--text"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "commutes with e: true"));
    CHECK(contains(r.out, "commutes with k^-1: true"));
    CHECK(contains(r.out, "central: true"));

    auto j = run({"center", "-j", "1"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["central"] == true);
    CHECK(parsed["commutes"]["f"] == true);
    CHECK(parsed["ad_invariant"]["e"] == true);
    // The printed element round-trips through the parser and is itself central.
    AlgebraElement c = parse_element(parsed["element"].get<std::string>());
    CHECK(!c.is_zero());
    CHECK(verify_central(c));
}

TEST_CASE("adjoint-basis lists the orbit and relation checks") {
    auto r = run({"adjoint-basis", "-l", "1", "--text"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lambda[1] = e*k^-1"));
    CHECK(contains(r.out, "relations: true"));
    CHECK(contains(r.out, "constructions agree: true"));

    auto cf = run({"adjoint-basis", "-l", "1", "--closed-form", "--text"});
    CHECK(cf.code == 0);
    CHECK(contains(cf.out, "lambda[1] = e*k^-1"));

    auto j = run({"adjoint-basis", "-l", "2"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["relations_ok"] == true);
    CHECK(parsed["constructions_agree"] == true);
    CHECK(parsed["lambda"]["2"] == "e^2*k^-2");
}

TEST_CASE("exit codes distinguish error classes") {
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);

    auto bad_expr = run({"normal-form", "e*("});
    CHECK(bad_expr.code == 2);
    CHECK(contains(bad_expr.err, "offset"));

    auto bad_spin = run({"rep", "-l", "foo", "e"});
    CHECK(bad_spin.code == 2);
    CHECK(contains(bad_spin.err, "bad spin"));

    auto neg_spin = run({"rep", "--spin=-1", "e"});
    CHECK(neg_spin.code == 4);
    CHECK(contains(neg_spin.err, "non-negative"));

    auto pole = run({"normal-form", "f*e-e*f", "--numeric", "1"});
    CHECK(pole.code == 3);
    CHECK(contains(pole.err, "pole"));

    auto negrad = run({"normal-form", "sqrt(1-t^2)", "--numeric", "2"});
    CHECK(negrad.code == 3);
    CHECK(contains(negrad.err, "radicand"));

    auto bad_t0 = run({"normal-form", "e", "--numeric", "two"});
    CHECK(bad_t0.code == 2);

    auto missing = run({"rep", "e"});
    CHECK(missing.code == 2);

    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "normal-form"));
    CHECK(contains(help.out, "wigner-eckart"));
}

TEST_CASE("spin cap honours the environment override") {
    unsetenv("QSL2_MAX_SPIN");
    CHECK(run({"rep", "-l", "4", "k"}).code == 0);
    auto capped = run({"rep", "-l", "9/2", "k"});
    CHECK(capped.code == 4);
    CHECK(contains(capped.err, "QSL2_MAX_SPIN"));

    setenv("QSL2_MAX_SPIN", "5", 1);
    CHECK(run({"rep", "-l", "9/2", "k"}).code == 0);
    CHECK(run({"rep", "-l", "11/2", "k"}).code == 4);

    setenv("QSL2_MAX_SPIN", "zzz", 1);
    CHECK(run({"rep", "-l", "1", "k"}).code == 4);

    unsetenv("QSL2_MAX_SPIN");
}

TEST_CASE("output flag writes to a file") {
    std::string path = "/tmp/qsl2_cli_output_test.txt";
    std::remove(path.c_str());
    auto r = run({"normal-form", "k*e", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content == "t^2*e*k\n");
    std::remove(path.c_str());

    auto bad = run({"normal-form", "k*e", "--output", "/nonexistent-dir/x.txt"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "cannot write"));
}
