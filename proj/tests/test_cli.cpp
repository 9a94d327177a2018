#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ellk/cli/app.hpp"
#include "ellk/sullivan/formality.hpp"
#include "ellk/sullivan/minimal_model.hpp"

using namespace ellk;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run ellk_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string model_path(const std::string& name) { return std::string(ELLK_MODELS_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse_cdga reads the diamond (c) model at beta = 0", "[cli][parser]") {
  const auto alg = parse_cdga("gen w 2\ngen x 2\ngen y 3\ngen z 7\nd y = x^2 + w^2\nd z = w^3*x");
  const auto ref = check_model_c(Rational(0)).algebra;
  CHECK(generator_degrees(alg) == generator_degrees(ref));
  for (std::size_t i = 0; i < alg.size(); ++i) CHECK(alg.differential(i).to_string() == ref.differential(i).to_string());
  CHECK(cohomology(alg, 8) == BettiVector::from_even({1, 2, 2, 2, 1}));
}

TEST_CASE("parse_cdga reads a projective-space model", "[cli][parser]") {
  const auto alg = parse_cdga("gen w 2\ngen y 9\nd y = w^5");
  CHECK(generator_degrees(alg) == std::vector<int>{2, 9});
  CHECK(cohomology(alg, 8) == BettiVector::from_even({1, 1, 1, 1, 1}));
  CHECK(alg.differential(1) == alg.gen("w").pow(5));
}

TEST_CASE("expression grammar", "[cli][parser]") {
  const auto alg = parse_cdga(
      "gen w 2\ngen x 2\ngen y 5   # comment\n"
      "d y = -(w + x)^2*w - 3/2*x^3 + 2*w*(x*w) # trailing\n");
  const auto w = alg.gen("w"), x = alg.gen("x");
  CHECK(alg.differential(2) == -((w + x).pow(2) * w) - Rational(3, 2) * x.pow(3) + Rational(2) * (w * x * w));

  SECTION("undeclared differentials default to zero") {
    const auto a = parse_cdga("gen u 3\ngen v 5\n");
    CHECK(a.differential(0).is_zero());
    CHECK(a.differential(1).is_zero());
  }
  SECTION("bidegrees are kept") {
    const auto a = parse_cdga("gen w 2 bidegree 1 1\ngen y 5\nd y = w^3\n");
    REQUIRE(a.generator(0).bidegree);
    CHECK(a.generator(0).bidegree->p == 1);
  }
  SECTION("odd squares vanish") {
    const auto a = parse_cdga("gen x 6\ngen u 3\ngen v 7\nd v = u*u + x*u*u\n");
    CHECK(a.differential(2).is_zero());
  }
}

TEST_CASE("parse errors carry line, column and a caret", "[cli][parser]") {
  SECTION("degree mismatch and self-reference are reported together") {
    const auto e = parse_failure("gen y 3\nd y = y");
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
    CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring("degree mismatch"));
    CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring("itself"));
    CHECK_THAT(std::string(e.what()), Catch::Matchers::EndsWith("  d y = y\n        ^"));
  }
  SECTION("unknown generator") {
    const auto e = parse_failure("gen w 2\ngen y 3\nd y = w^2 + q\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 13);
    CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring("unknown generator 'q'"));
  }
  SECTION("reference to a later generator") {
    const auto e = parse_failure("gen w 2\ngen y 3\ngen z 2\nd y = z^2\n");
    CHECK(e.column() == 7);
    CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring("not declared before y"));
  }
  SECTION("syntax") {
    CHECK(parse_failure("gen w 2\ngen y 3\nd y = w^2 +* w\n").column() == 12);
    CHECK(parse_failure("gen w 2\ngen y 3\nd y = (w^2\n").message() == "expected ')'");
    CHECK(parse_failure("gen w 2\ngen y 9\nd y = 2/0*w^5\n").message() == "zero denominator");
    CHECK(parse_failure("gen w 2\ngen y 9\nd y = w^\n").line() == 3);
    CHECK(parse_failure("gen w two\n").column() == 7);
    CHECK(parse_failure("gen 2w 2\n").message() == "invalid generator name '2w'");
    CHECK(parse_failure("gem w 2\n").message() == "unknown directive 'gem'");
    CHECK(parse_failure("gen w 2\ngen w 4\n").line() == 2);
    CHECK(parse_failure("gen w 1\n").message() == "generator degree must be at least 2");
    CHECK(parse_failure("gen w 2 bidegree 2 1\n").line() == 1);
    CHECK(parse_failure("# nothing\n").message() == "no generators declared");
  }
  SECTION("validation runs on load") {
    // dv = u*t with du = w^2 gives d^2 v = w^2 t != 0
    const auto e = parse_failure("gen w 2\ngen u 3\ngen t 3\ngen v 5\nd u = w^2\nd v = u*t\n");
    CHECK(e.line() == 6);
  }
  SECTION("relations must be even and non-zero") {
    CHECK(parse_failure("gen w 2\ngen y 3\nrel w*y\n").line() == 3);
    CHECK(parse_failure("gen w 2\nrel w - w\n").message() == "relation is zero");
    CHECK(parse_failure("gen w 2\nclass v\n").line() == 2);
  }
}

TEST_CASE("print then parse is the identity on shipped and constructed models", "[cli][roundtrip]") {
  std::vector<SullivanAlgebra> models;
  for (const auto& entry : std::filesystem::directory_iterator(ELLK_MODELS_DIR))
    if (entry.path().extension() == ".cdga") {
      const auto doc = parse_document(read_file(entry.path().string()));
      CHECK(print_document(parse_document(print_document(doc))) == print_document(doc));
      models.push_back(doc.algebra);
    }
  REQUIRE(models.size() >= 6);
  for (const auto& r : realize_products()) models.push_back(r.model);
  for (const auto& b : default_samples_c()) models.push_back(check_model_c(b).algebra);
  for (const auto& [a, b] : default_samples_d()) models.push_back(check_model_d(a, b).algebra);
  for (const auto& [k, l] : default_samples_i()) models.push_back(shape_i_model(k, l));
  models.push_back(minimal_model_from_ring(quadric_ring(), 16));
  models.push_back(associated_pure(models.front()));

  for (const auto& m : models) {
    const auto text = print_cdga(m);
    INFO(text);
    const auto back = parse_cdga(text);
    CHECK(back == m);
    CHECK(print_cdga(back) == text);
  }
}

TEST_CASE("document views", "[cli][parser]") {
  SECTION("rel lines give a ring presentation") {
    const auto doc = parse_document(read_file(model_path("quadric.cdga")));
    CHECK(doc.distinguished_class == std::optional<std::string>("w"));
    const auto gb = doc.presentation().basis();
    CHECK(hilbert_values(gb, 8) == std::vector<std::size_t>{1, 0, 1, 0, 2, 0, 1, 0, 1});
  }
  SECTION("a pure model gives its cohomology ring") {
    const auto doc = parse_document(read_file(model_path("diamond_c.cdga")));
    CHECK(is_finite_quotient(doc.presentation().basis()));
  }
  SECTION("even generators without differentials give a polynomial ring") {
    const auto doc = parse_document("gen a 2\ngen b 4\n");
    CHECK(doc.presentation().relations.empty());
  }
}

TEST_CASE("exponents subcommand", "[cli][app]") {
  const auto r = ellk_run({"exponents", "--dim", "8", "--equal-ranks"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "a=[1] b=[5] m=8 total=5\n"
        "a=[1,1] b=[2,4] m=8 total=8\n"
        "a=[1,1] b=[3,3] m=8 total=9\n"
        "a=[1,2] b=[3,4] m=8 total=6\n"
        "a=[1,3] b=[2,6] m=8 total=4\n"
        "a=[1,1,1] b=[2,2,3] m=8 total=12\n"
        "a=[1,1,2] b=[2,2,4] m=8 total=8\n"
        "a=[1,1,1,1] b=[2,2,2,2] m=8 total=16\n");
  CHECK(ellk_run({"exponents", "--dim", "8", "--equal-ranks"}).out == r.out);

  const auto all = ellk_run({"exponents", "--dim", "8"});
  CHECK_THAT(all.out, Catch::Matchers::ContainsSubstring("a=[1] b=[2,2,2] m=8 total=-\n"));

  const auto j = json::parse(ellk_run({"--json", "exponents", "--dim", "8", "--equal-ranks"}).out);
  CHECK(j["tuples"].size() == 8);
  CHECK(j["tuples"][0]["a"] == json::array({1}));
  CHECK(j["tuples"][0]["b"] == json::array({5}));
  CHECK(j["tuples"][0]["total"] == 5);

  CHECK(ellk_run({"exponents", "--dim", "7"}).code == 2);
  CHECK(ellk_run({"exponents"}).code == 2);
}

TEST_CASE("classify4 subcommand", "[cli][app]") {
  const auto text = ellk_run({"classify4"});
  CHECK(text.code == 0);
  CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring("(g) admitted-unrealized"));
  CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring("excluded b2=4 shape (i)"));
  CHECK_THAT(text.out, Catch::Matchers::EndsWith("7 diamonds admitted (unrealized: g), 5 exclusions, all witnesses re-verified\n"));

  const auto r = ellk_run({"classify4", "--json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j["diamonds"].size() == 7);
  std::string labels;
  for (const auto& d : j["diamonds"]) {
    labels += d["label"].get<std::string>();
    CHECK(d["reverified"] == true);
    CHECK(d["diamond"]["h"].size() == 5);
  }
  CHECK(labels == "abcdefg");
  CHECK(j["diamonds"][6]["status"] == "admitted-unrealized");
  CHECK(j["diamonds"][6]["realization"] == "unrealized");
  CHECK(j["exclusions"].size() == 5);
  bool signature_witness = false;
  for (const auto& f : j["exclusions"][3]["filters"])
    if (f["name"] == "hodge_riemann") signature_witness = f["witness"]["signature"] == 4;
  CHECK(signature_witness);
  CHECK(j["summary"]["unrealized"] == json::array({"g"}));

  const auto seeded = json::parse(ellk_run({"--seed", "11", "classify4", "--json"}).out);
  CHECK(seeded["diamonds"] == j["diamonds"]);
  CHECK(seeded["exclusions"][4]["samples"] != j["exclusions"][4]["samples"]);
}

TEST_CASE("file subcommands", "[cli][app]") {
  SECTION("cohomology") {
    const auto r = ellk_run({"cohomology", model_path("diamond_d.cdga")});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("betti (degrees 0..8): 1,0,2,0,3,0,2,0,1\n"));
    const auto q = json::parse(ellk_run({"cohomology", model_path("quadric.cdga"), "--json"}).out);
    CHECK(q["betti"] == json::array({1, 0, 1, 0, 2, 0, 1, 0, 1}));
    CHECK(ellk_run({"cohomology", model_path("cp4.cdga"), "--up-to", "100"}).code == 2);
    const auto s = json::parse(ellk_run({"--json", "cohomology", model_path("s3_wedge.cdga"), "--up-to", "6"}).out);
    CHECK(s["elliptic"] == false);
    CHECK(s["betti"] == json::array({1, 0, 1, 0, 2, 0, 2}));
  }
  SECTION("pure") {
    const auto r = ellk_run({"pure", model_path("non_pure.cdga")});
    CHECK(r.code == 0);
    CHECK(r.out == "gen x 2\ngen u 3\ngen t 3\ngen w 7\nd w = x^4\n# elliptic: yes\n");
    CHECK(parse_cdga(r.out).is_pure());
  }
  SECTION("groebner") {
    const auto r = ellk_run({"groebner", model_path("diamond_c.cdga")});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("finite: yes\nhilbert: 1,0,2,0,2,0,2,0,1\ndimension: 8\n"));
    const auto inf = ellk_run({"groebner", model_path("s3_wedge.cdga")});
    CHECK_THAT(inf.out, Catch::Matchers::ContainsSubstring("finite: no"));
    CHECK(ellk_run({"groebner", model_path("non_pure.cdga")}).code == 2);
  }
  SECTION("errors") {
    CHECK(ellk_run({"cohomology", model_path("missing.cdga")}).code == 2);
    const auto dir = std::filesystem::temp_directory_path() / "ellk_cli_test.cdga";
    std::ofstream(dir) << "gen y 3\nd y = y\n";
    const auto r = ellk_run({"pure", dir.string()});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("line 2, column 7"));
    std::filesystem::remove(dir);
  }
}

TEST_CASE("ci-scan subcommand", "[cli][app]") {
  const auto r = ellk_run({"ci-scan", "--max-dim", "6", "--max-degree", "8", "--jobs", "3"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("(5) in P^4  row=1,101,101,1  level=3  rejected  b3=204 != 0\n"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("(3) in P^5  row=0,1,21,1,0  level=2  rejected  b4=23 > 2\n"));
  CHECK_THAT(r.out, Catch::Matchers::EndsWith("projective spaces and quadrics only\n"));
  CHECK(ellk_run({"ci-scan", "--max-dim", "6", "--max-degree", "8"}).out == r.out);
  const auto j = json::parse(ellk_run({"--json", "ci-scan", "--max-dim", "6", "--max-degree", "8"}).out);
  CHECK(j["candidates"].size() == 8);
  CHECK(ellk_run({"ci-scan", "--max-dim", "2", "--max-degree", "8"}).code == 2);
  CHECK(ellk_run({"ci-scan", "--max-dim", "6"}).code == 2);
}

TEST_CASE("check-model subcommand", "[cli][app]") {
  for (const char* m : {"c", "d", "i"}) {
    const auto r = ellk_run({"check-model", m});
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  }
  CHECK(ellk_run({"check-model", "c", "--params", "0;1;-5/2"}).out ==
        "c beta=0: elliptic degrees=2,2,3,7 betti=1,2,2,2,1 total=8 (w,x)^5-in-ideal=yes  PASS\n"
        "c beta=1: elliptic degrees=2,2,3,7 betti=1,2,2,2,1 total=8 (w,x)^5-in-ideal=yes  PASS\n"
        "c beta=-5/2: elliptic degrees=2,2,3,7 betti=1,2,2,2,1 total=8 (w,x)^5-in-ideal=yes  PASS\n");
  CHECK(ellk_run({"check-model", "d", "--params", "0,-1"}).code == 2);
  CHECK(ellk_run({"check-model", "d", "--params", "1"}).code == 2);
  CHECK(ellk_run({"check-model", "e"}).code == 2);

  const auto plain = ellk_run({"check-model", "d"}).out;
  const auto a = ellk_run({"--seed", "5", "check-model", "d"}).out;
  const auto b = ellk_run({"check-model", "d", "--seed", "5"}).out;
  CHECK(a == b);
  CHECK(a != plain);
  auto sorted = [](std::string s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) lines.push_back(l);
    std::sort(lines.begin(), lines.end());
    return lines;
  };
  CHECK(sorted(a) == sorted(plain));

  const auto j = json::parse(ellk_run({"--json", "check-model", "i"}).out);
  CHECK(j["passed"] == true);
  for (const auto& s : j["samples"]) CHECK(s["elliptic"] == false);
}

TEST_CASE("usage errors", "[cli][app]") {
  CHECK(ellk_run({}).code == 2);
  CHECK(ellk_run({"bogus"}).code == 2);
  CHECK(ellk_run({"exponents", "--dim", "8", "--frobnicate"}).code == 2);
  CHECK(ellk_run({"--help"}).code == 0);
}
