#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "motarr/error.hpp"
#include "motarr/io.hpp"
#include "motarr/report.hpp"

using namespace motarr;
using namespace fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::precondition_violated;
}

const char* t_doc = R"({"field": "q", "dimension": 2, "hyperplanes": [
    {"constant": "0", "coeffs": ["2", "0"]},
    {"constant": "0", "coeffs": ["0", "1"]},
    {"constant": "0", "coeffs": ["1", "-1"]}]})";

}  // namespace

TEST_CASE("document round trip")
{
    auto doc = parse_document_text(t_doc);
    CHECK(doc.hyperplanes.size() == 3);
    CHECK(parse_document(to_json(doc)) == doc);
    auto n = normalize(parse_document_text(
        R"({"field": "fp:5", "dimension": 1, "hyperplanes": [{"constant": "-1", "coeffs": ["6/2"]}], "order": [1]})"));
    CHECK(n.hyperplanes[0].constant == "4");
    CHECK(n.hyperplanes[0].coeffs[0] == "3");
    CHECK(normalize(n) == n);
    CHECK(parse_document(to_json(n)) == n);
    auto arr = build(doc);
    CHECK(normalize(document_of(arr)) == normalize(doc));
}

TEST_CASE("document errors")
{
    CHECK(kind_of([] { parse_document_text("{"); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { parse_document_text(R"({"field": "q", "dimension": 2, "hyperplanes": [{"constant": "0", "coeffs": ["1"]}]})"); }) ==
          ErrorKind::parse_error);
    CHECK(kind_of([] { parse_document_text(R"({"field": "fp:4", "dimension": 1, "hyperplanes": []})"); }) ==
          ErrorKind::parse_error);
    CHECK(kind_of([] { parse_document_text(R"({"field": "q", "dimension": 1, "hyperplanes": [{"constant": 0.5, "coeffs": ["1"]}]})"); }) ==
          ErrorKind::parse_error);
    CHECK(kind_of([] {
              parse_document_text(R"({"field": "q", "dimension": 1, "hyperplanes": [{"constant": "0", "coeffs": ["1"]}], "order": [2]})");
          }) == ErrorKind::parse_error);
    try {
        parse_document_text(R"({"field": "q", "dimension": 1, "hyperplanes": [{"constant": "0", "coeffs": ["x"]}]})");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("hyperplanes[0].coeffs[0]") != std::string::npos);
    }
    CHECK(kind_of([] {
              build(parse_document_text(R"({"field": "q", "dimension": 1, "hyperplanes": [{"constant": "1", "coeffs": ["0"]}]})"));
          }) == ErrorKind::zero_form);
}

TEST_CASE("order permutes before computing")
{
    auto doc = parse_document_text(t_doc);
    auto arr = build(doc, std::nullopt, parse_order("3,1,2"));
    CHECK(arr.chosen(0) == build(doc).chosen(2));
    CHECK(kind_of([] { parse_order("1,x"); }) == ErrorKind::parse_error);
    CHECK(kind_of([&] { build(doc, std::nullopt, std::vector<std::size_t>{1, 1, 2}); }) == ErrorKind::parse_error);
}

TEST_CASE("unit expressions")
{
    auto arr = build(parse_document_text(t_doc));  // chosen forms 2x, y, x - y
    auto u = parse_unit(arr, "x");
    CHECK(u.scalar.value() == Scalar(q(), mpq_class(1, 2)));
    CHECK(u.exponents == std::vector<long>{1, 0, 0});
    auto v = parse_unit(arr, "(y - x)^-2 * 3 / x1");
    CHECK(v.scalar.value() == Scalar(q(), 6));
    CHECK(v.exponents == std::vector<long>{-1, 0, -2});
    CHECK(parse_unit(arr, "h1 - 2*x + 5").exponents == std::vector<long>{0, 0, 0});
    CHECK(parse_unit(arr, "-2y").scalar.value() == Scalar(q(), -2));
    CHECK(parse_word(arr, "x; y; x-y").size() == 3);
    CHECK(parse_word(arr, " ").empty());
    CHECK(kind_of([&] { parse_unit(arr, "x + y"); }) == ErrorKind::precondition_violated);
    CHECK(kind_of([&] { parse_unit(arr, "x - x"); }) == ErrorKind::zero_unit);
    CHECK(kind_of([&] { parse_unit(arr, "x*y + 1"); }) == ErrorKind::parse_error);
    CHECK(kind_of([&] { parse_unit(arr, "t"); }) == ErrorKind::parse_error);
    CHECK(kind_of([&] { parse_unit(arr, "(x"); }) == ErrorKind::parse_error);

    auto formal = build(parse_document_text(R"({"field": "formal", "dimension": 1, "hyperplanes": [{"constant": "0", "coeffs": ["1"]}]})"));
    auto w = parse_unit(formal, "t^2 * x / s");
    CHECK(w.scalar.letters() == std::map<std::string, int>{{"s", -1}, {"t", 2}});

    // value of the unit at a point agrees with the expression
    auto at = parse_unit(arr, "(x - y)^2 / (3*y)");
    CHECK(at.scalar.value() == Scalar(q(), mpq_class(1, 3)));
    CHECK(at.exponents == std::vector<long>{0, -1, 2});
}

TEST_CASE("reports")
{
    auto doc = parse_document_text(t_doc);
    RunOptions o;
    o.command = "rank";
    auto r = run(o, doc);
    CHECK(r["result"]["rank"] == 6);
    CHECK(r["result"]["poincare"] == nlohmann::json::array({1, 3, 2}));
    CHECK(r["result"]["cross_check"] == "os-ranks agree");
    CHECK(r.dump() == run(o, doc).dump());

    auto p = parse_document_text(R"({"field": "q", "dimension": 1, "hyperplanes": [
        {"constant": "0", "coeffs": ["1"]}, {"constant": "-1", "coeffs": ["1"]}]})");
    o.command = "reduce";
    o.word = "x; x-1";
    CHECK(run(o, p)["result"]["basis"] == nlohmann::json({{"{1}", "[-1]"}}));
    o.word = "x; 1-x";
    CHECK(run(o, p)["result"]["basis"].empty());

    o.command = "verify";
    o.seed = 7;
    o.trials = 100;
    o.backend = Field::prime(5);
    auto v = run(o, parse_document_text(R"({"field": "q", "dimension": 2, "hyperplanes": [
        {"constant": "0", "coeffs": ["1", "0"]}, {"constant": "0", "coeffs": ["0", "1"]}]})"));
    CHECK(v["result"]["failures"] == 0);
    CHECK(v["flags"]["backend"] == "fp:5");

    o.command = "tame-symbol";
    o.backend.reset();
    o.word = "x; x-1";
    auto t = run(o, p);
    REQUIRE(t["result"]["pairs"].size() == 1);
    CHECK(t["result"]["pairs"][0]["value"] == "-1");
    CHECK(t["result"]["pairs"][0]["flat"] == "{1}");
    CHECK(t["provenance"]["pairs"]["outcome"] == "agree");

    o.command = "bogus";
    CHECK(kind_of([&] { run(o, p); }) == ErrorKind::parse_error);
}
