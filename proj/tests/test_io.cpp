#include <catch_amalgamated.hpp>

#include "hyperdim/io/generate.hpp"
#include "hyperdim/io/input.hpp"
#include "hyperdim/io/report.hpp"
#include "oracles.hpp"

using namespace hyperdim;
using namespace hyperdim::io;
using oracle::vec;

TEST_CASE("parse_rational", "[io]") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("+1/3") == Rational(1, 3));
    CHECK(parse_rational("123456789012345678901234567890") ==
          Rational(Integer("123456789012345678901234567890")));
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
}

TEST_CASE("parse_input", "[io]") {
    const auto doc = parse_input(R"({"n": 2, "forms": [[1, 0, "1/2"], ["-3", 2, 0]]})");
    CHECK(doc.n == 2);
    REQUIRE(doc.forms.size() == 2);
    CHECK(doc.forms[0] == Vector{1, 0, Rational(1, 2)});
    CHECK(doc.forms[1] == vec({-3, 2, 0}));

    CHECK_THROWS_WITH(parse_input(R"({"n": 2, "forms": [[1, 0.5, 0]]})"),
                      Catch::Matchers::ContainsSubstring("forms[0][1]") &&
                          Catch::Matchers::ContainsSubstring("p/q"));
    CHECK_THROWS_WITH(parse_input(R"({"n": 2, "forms": [[1, 0, 0],)"),
                      Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_AS(parse_input(R"({"forms": []})"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"n": 2})"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"n": 2.0, "forms": []})"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"n": 2, "forms": [[1, true, 0]]})"), InputError);
    CHECK_THROWS_AS(parse_input(R"([1, 2])"), InputError);
}

TEST_CASE("input documents round-trip through JSON", "[io]") {
    InputDocument doc{2, {Vector{1, Rational(-2, 3), 0}, Vector{Rational(Integer("99999999999999999999")), 1, 1}}};
    const auto text = to_json(doc).dump();
    const auto back = parse_input(text);
    CHECK(back.n == doc.n);
    CHECK(back.forms == doc.forms);
}

TEST_CASE("generate", "[io]") {
    const auto gp = generate({GenerateKind::general_position, 2, 5, 0, {}, {}, 3});
    const auto a = Arrangement::load(gp.n, gp.forms);
    CHECK(a.size() == 5);
    CHECK(is_general_position(a));

    const auto pencil = generate({GenerateKind::pencil, 2, 3, 0, {}, {}, 3});
    CHECK(compute_m(Arrangement::load(pencil.n, pencil.forms)) == 0);

    const GenerateRequest rnd{GenerateKind::random, 3, 6, 42, {}, {}, 3};
    CHECK(to_json(generate(rnd)) == to_json(generate(rnd)));
    CHECK(Arrangement::load(3, generate(rnd).forms).size() == 6);

    CHECK_THROWS_AS(generate({GenerateKind::general_position, 2, 3, 0, {1, 1, 2}, {}, 3}), InputError);
    CHECK_THROWS_AS(generate({GenerateKind::general_position, 2, 3, 0, {1, 2}, {}, 3}), InputError);
    CHECK_THROWS_AS(generate({GenerateKind::pencil, 2, 3, 0, {}, 1, 3}), InputError);
    CHECK_THROWS_AS(generate({GenerateKind::random, 1, 50, 0, {}, {}, 1}), InputError);
    CHECK_THROWS_AS(parse_kind("spiral"), InputError);
}

TEST_CASE("analyze end to end", "[io]") {
    const auto four = analyze(parse_input(R"({"n":2,"forms":[[1,0,0],[0,1,0],[0,0,1],[1,1,1]]})"));
    CHECK(four.dims.d_max == 1);
    REQUIRE(four.dims.best_partition);
    CHECK(four.dims.best_partition->block_count() == 2);
    REQUIRE(four.witness);
    CHECK(four.witness->dim == 1);
    CHECK(four.witness->verification.ok());
    CHECK(exit_status(four) == kOk);

    const auto single = analyze(parse_input(R"({"n":2,"forms":[[1,0,0]]})"));
    CHECK(single.dims.d_max == 2);
    CHECK_FALSE(single.dims.best_partition);
    CHECK(single.witness->dim == 2);

    const auto five = analyze(generate({GenerateKind::general_position, 2, 5, 0, {}, {}, 3}));
    CHECK(five.dims.d_max == 0);
    CHECK(five.verdict.finiteness == true);

    const auto dup = analyze(parse_input(R"({"n":2,"forms":[[1,0,0],[2,0,0],[0,1,0]]})"));
    REQUIRE(dup.warnings.size() == 1);
    CHECK_THAT(dup.warnings[0], Catch::Matchers::ContainsSubstring("same hyperplane"));

    AnalyzeOptions no_witness;
    no_witness.witness = false;
    CHECK_FALSE(analyze(parse_input(R"({"n":2,"forms":[[1,0,0]]})"), no_witness).witness);

    AnalyzeOptions brute;
    brute.brute_force = true;
    CHECK_THROWS_AS(analyze(generate({GenerateKind::general_position, 2, 10, 0, {}, {}, 3}), brute),
                    PreconditionError);
}

TEST_CASE("reports are deterministic and their witnesses re-verify", "[io][property]") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto doc = generate({GenerateKind::random, 1 + static_cast<int>(seed % 4),
                                   1 + seed % 7, seed, {}, {}, 2});
        AnalyzeOptions many;
        many.workers = 3;
        const auto first = report_to_json(analyze(doc)).dump(2);
        const auto again = report_to_json(analyze(parse_input(to_json(doc).dump()), many)).dump(2);
        CHECK(first == again);

        const auto report = json::parse(first);
        const auto a = Arrangement::load(doc.n, doc.forms);
        const auto y = witness_points_from_report(report, a.width());
        CHECK(verify_cond(a, y).ok());
        CHECK(static_cast<int>(y.rank()) - 1 == report["witness"]["dim"].get<int>());
        CHECK(report["witness"]["dim"] == report["d_max"]);
    }
}

TEST_CASE("text report", "[io]") {
    const auto text = report_to_text(analyze(parse_input(R"({"n":2,"forms":[[1,0,0],[0,1,0],[0,0,1],[1,1,1]]})")));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("d_max         1"));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("verified"));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("cross-check   consistent"));
}
