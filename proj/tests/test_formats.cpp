#include <doctest.h>

#include "cdgalab/errors.hpp"
#include "fixtures.hpp"

using namespace cdgalab;

namespace {

int error_line(const std::string& text) {
  try {
    parse_cdga(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("cdga files round-trip") {
  for (const char* name : {"A.cdga", "B.cdga", "A5.cdga", "Bz.cdga"}) {
    INFO(name);
    auto a = load_fixture(name);
    std::string text = serialize_cdga(*a);
    auto again = parse_cdga(text);
    CHECK(describe_cdga(*again) == describe_cdga(*a));
    CHECK(serialize_cdga(*again) == text);
    CHECK(again->algebra().same_as(a->algebra()));
  }
}

TEST_CASE("cdga files load the n = 3 model") {
  auto a = load_fixture("A.cdga");
  CHECK(a->cap() == 9);
  CHECK(a->algebra().size() == 9);
  CHECK(check_d_squared(*a).passed());
}

TEST_CASE("cdga errors carry line numbers") {
  CHECK(error_line("cap 9\ngenerator x 3\ngenerator y 3\ngenerator z 3\ngenerator u 5\nd u = x*y*z\n") == 6);
  CHECK(error_line("cap 9\ngenerator x 3\ngenerator u 5\n\nd u = x^2\n") == 5);
  CHECK(error_line("cap 8\ngenerator a 2\ngenerator b 3\ngenerator c 4\nd b = a^2\nd c = a*b\n") == 6);
  CHECK(error_line("cap 9\ngenerator x 3\nbogus\n") == 3);
  CHECK(error_line("cap 9\ngenerator x 3\ngenerator x 3\n") == 3);
  CHECK(error_line("cap 9\ngenerator x three\n") == 2);
  CHECK(error_line("cap 9\ngenerator x 3\nd y = x\n") == 3);
  CHECK(error_line("generator x 3\n") == 0);
  // comments and blank lines
  CHECK_NOTHROW(parse_cdga("# model\ncap 4   # cap\n\ngenerator x 2 # even\n"));
}

TEST_CASE("resolution files round-trip") {
  for (const char* name : {"Y.res", "Y_uncorrected.res", "fig5.res"}) {
    INFO(name);
    auto f = parse_resolution_file(read_text(fixture(name)));
    auto again = parse_resolution_file(serialize_resolution(f));
    CHECK(again == f);
  }
  auto f = parse_resolution_file(read_text(fixture("Y.res")));
  CHECK(f.input.top_level == 2);
  CHECK(f.target_path == std::optional<std::string>("A.cdga"));
  CHECK(f.input.gamma == std::vector<std::pair<int, int>>{{3, 3}, {6, 1}, {8, 1}});
  CHECK(f.input.null.size() == 1);
}

TEST_CASE("resolution file errors") {
  CHECK_THROWS_AS(parse_resolution_file("cap 9\nbasis x 3\n"), ParseError);
  CHECK_THROWS_AS(parse_resolution_file("cap 9\nlevel 3\n"), ParseError);
  CHECK_THROWS_AS(parse_resolution_file("cap 9\nlevel 0\nattach x = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_resolution_file("level 0\n"), ParseError);
  try {
    auto f = parse_resolution_file("cap 7\nlevel 0\nbasis x 3\nbasis y 3\nlevel 1\nbasis u 6\nattach u = x*y + q\n");
    TruncatedRealization::assemble(f.input);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
  }
}

TEST_CASE("morphism files") {
  auto lm = load_morphism(fixture("whitehead.morph"));
  CHECK(lm.defaulted == std::vector<std::string>{"x", "y"});
  CHECK(lm.morphism.image("u").to_string() == "z");
  auto f = parse_morphism_file(read_text(fixture("identity.morph")));
  CHECK(parse_morphism_file(serialize_morphism(f)) == f);
  auto a5 = load_fixture("A5.cdga");
  auto bad = parse_morphism_file("map x = x\nmap y = 0\nmap u = u\n");
  try {
    build_morphism(bad, a5, a5);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_morphism(fixture("negate_w.theta")), ParseError);
}

TEST_CASE("missing files") { CHECK_THROWS_AS(load_cdga(fixture("nope.cdga")), ParseError); }
