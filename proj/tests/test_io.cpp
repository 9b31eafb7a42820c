#include "doctest.h"
#include "hfcontact/io.hpp"
#include "support.hpp"

using namespace hf;

namespace {

std::vector<Diagnostic> errors(const std::string& text) {
  try {
    parse_document(text, "t");
  } catch (const InputError& e) {
    return e.diagnostics();
  }
  return {};
}

int line_of(const std::string& text, const std::string& needle) {
  auto pos = text.find(needle);
  REQUIRE(pos != std::string::npos);
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

std::string replaced(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

bool has(const std::vector<Diagnostic>& ds, int line, const std::string& needle) {
  for (const auto& d : ds)
    if (d.line == line && d.message.find(needle) != std::string::npos) return true;
  return false;
}

std::string nice_text(const std::string& fixture) { return serialize(nicened_document(hft::fixture(fixture))); }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("fixtures are canonical") {
    auto all = list_fixtures();
    CHECK(all.size() == 7);
    for (const auto& f : all) {
      CAPTURE(f.name);
      CHECK_FALSE(f.provenance.empty());
      const auto& text = fixture_text(f.name);
      auto doc = parse_document(text, f.name);
      CHECK(doc.name == f.name);
      CHECK(serialize(doc) == text);
      CHECK(parse_document(serialize(doc)) == doc);
    }
    CHECK_THROWS_AS(fixture_text("no_such_fixture"), std::out_of_range);
  }

  TEST_CASE("document kinds") {
    CHECK(hft::fixture("s1s2_basisII").kind == DocumentKind::OpenBook);
    CHECK(hft::fixture("s1s2_surgery").kind == DocumentKind::Surgery);
    CHECK(parse_document(nice_text("s1s2_basisII")).kind == DocumentKind::Diagram);
    CHECK(std::string(kind_name(DocumentKind::Surgery)) == "surgery");
  }

  TEST_CASE("derived documents round-trip") {
    for (const auto& name : hft::open_book_fixtures()) {
      auto raw = raw_document(hft::fixture(name));
      auto txt = serialize(raw);
      CHECK(parse_document(txt) == raw);
      CHECK(serialize(parse_document(txt)) == txt);
      auto nice = nicened_document(hft::fixture(name));
      CHECK(nice.finger_moves.empty());
      auto nt = serialize(nice);
      CHECK(parse_document(nt) == nice);
      CHECK(serialize(parse_document(nt)) == nt);
    }
  }

  TEST_CASE("diagram inputs give the same report as their open book") {
    for (const auto& name : hft::open_book_fixtures()) {
      CAPTURE(name);
      auto a = run_pipeline(hft::fixture(name));
      auto b = run_pipeline(nicened_document(hft::fixture(name)));
      auto c = run_pipeline(raw_document(hft::fixture(name)));
      CHECK(b.generator_names == a.generator_names);
      CHECK(b.complex.boundary == a.complex.boundary);
      CHECK(c.complex.boundary == a.complex.boundary);
      CHECK(b.total.dimension == a.total.dimension);
      CHECK(c.contact_status.nonzero == a.contact_status.nonzero);
    }
  }

  TEST_CASE("a missing vertex is reported on the edge's line") {
    auto text = nice_text("s1s2_basisII");
    const std::string edge = R"({"id":3,"family":"alpha","curve":1,"tail":3,"head":4})";
    int line = line_of(text, edge);
    auto bad = replaced(text, edge, R"({"id":3,"family":"alpha","curve":1,"tail":42,"head":4})");
    auto ds = errors(bad);
    REQUIRE_FALSE(ds.empty());
    CHECK(has(ds, line, "42"));
  }

  TEST_CASE("duplicate ids and keys") {
    auto text = nice_text("s1s2_basisII");
    const std::string v = R"({"id":4,"alpha":1,"beta":2,"side":0})";
    int line = line_of(text, v);
    auto ds = errors(replaced(text, v, R"({"id":3,"alpha":1,"beta":2,"side":0})"));
    CHECK(has(ds, line, "duplicate"));

    auto dk = errors(replaced(text, R"("curves": 3,)", "\"curves\": 3,\n  \"curves\": 3,"));
    CHECK(has(dk, line_of(text, R"("curves": 3,)") + 1, "duplicate"));
  }

  TEST_CASE("unknown keys and wrong types") {
    auto text = fixture_text("s1s2_surgery");
    auto ds = errors(replaced(text, R"("kind": "surgery",)", "\"kind\": \"surgery\",\n  \"colour\": 1,"));
    CHECK(has(ds, 3, "colour"));
    CHECK_FALSE(errors(replaced(text, R"("tb":-2)", R"("tb":"-2")")).empty());
    CHECK_FALSE(errors(replaced(text, R"("kind": "surgery")", R"("kind": "knot")")).empty());
  }

  TEST_CASE("surgery inputs are checked") {
    auto text = fixture_text("s1s2_surgery");
    auto doc = parse_document(text);
    auto asym = doc;
    asym.surgery.linking[0][1] = 3;
    CHECK_FALSE(errors(serialize(asym)).empty());
    auto coef = doc;
    coef.surgery.components[0].coefficient = 2;
    CHECK_FALSE(errors(serialize(coef)).empty());
  }

  TEST_CASE("open book inputs are checked") {
    auto doc = hft::fixture("s1s2_basisII");
    auto twist = doc;
    twist.monodromy[0].sign = 2;
    CHECK_FALSE(errors(serialize(twist)).empty());
    auto nonsimple = doc;
    nonsimple.monodromy.push_back({std::nullopt, {0, 0}, 1});
    CHECK_FALSE(errors(serialize(nonsimple)).empty());
    auto arcs = doc;
    arcs.arcs.pop_back();
    CHECK_FALSE(errors(serialize(arcs)).empty());
    auto rot = doc;
    rot.rotations = {{0, 1, 2}};
    CHECK_FALSE(errors(serialize(rot)).empty());
  }

  TEST_CASE("syntax errors carry a line number") {
    auto ds = errors("{\n  \"kind\": \"diagram\",\n  \"name\": \n}");
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].line == 4);
    CHECK_FALSE(errors("").empty());
    CHECK_FALSE(errors("[1,2]").empty());
  }

  TEST_CASE("unknown annotation tuples are rejected by the pipeline") {
    auto doc = hft::fixture("s1s2_basisII");
    doc.annotations.generators.push_back({"Q", {0, 0, 0}});
    CHECK_THROWS_AS(run_pipeline(doc), InputError);
  }

  TEST_CASE("missing files") { CHECK_THROWS_AS(load_document("/nonexistent/input.json"), InputError); }
}
