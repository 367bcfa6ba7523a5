#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "morley/constructions.hpp"
#include "morley/svg.hpp"

using namespace morley;

namespace {

MorleyConfiguration sample_config() {
  return classic_morley(triangle_from_angles(deg2rad(60), deg2rad(60), deg2rad(60)));
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

// minimal XML well-formedness check: declaration, balanced tags, quoted
// attribute ends
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?') {
      if (tag.back() != '?') return false;
      continue;
    }
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (tag.back() == '/') continue;  // self-closing
    std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
    stack.push_back(name);
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("render_svg is bytewise deterministic") {
  MorleyConfiguration cfg = sample_config();
  RenderStyle style;
  CHECK(render_svg(cfg, style) == render_svg(cfg, style));
}

TEST_CASE("rendered document is well-formed and carries the declared layers") {
  MorleyConfiguration cfg = sample_config();
  RenderStyle style;
  style.trisectors = true;
  style.bisectors = true;
  style.flanks = true;
  style.circumcircles = true;
  style.labels = true;
  std::string svg = render_svg(cfg, style);
  CHECK(xml_well_formed(svg));
  CHECK(count_occurrences(svg, "class=\"side\"") == 3);
  CHECK(count_occurrences(svg, "class=\"cevian\"") == 3);
  CHECK(count_occurrences(svg, "class=\"trisector\"") == 6);
  CHECK(count_occurrences(svg, "class=\"flank\"") == 6);
  CHECK(count_occurrences(svg, "class=\"bisector\"") == 3);
  CHECK(count_occurrences(svg, "class=\"circumcircle\"") == 3);
  CHECK(count_occurrences(svg, "class=\"xyz\"") == 1);
  CHECK(count_occurrences(svg, "class=\"pt\"") == 12);
  CHECK(count_occurrences(svg, "class=\"label\"") == 12);

  RenderStyle bare;
  bare.trisectors = false;
  bare.labels = false;
  std::string plain = render_svg(cfg, bare);
  CHECK(xml_well_formed(plain));
  CHECK(count_occurrences(plain, "class=\"trisector\"") == 0);
  CHECK(count_occurrences(plain, "class=\"circumcircle\"") == 0);
  CHECK(count_occurrences(plain, "class=\"label\"") == 0);
}

TEST_CASE("circumcircle layer adds exactly three circles") {
  MorleyConfiguration cfg = converse_construct({deg2rad(80), deg2rad(80), deg2rad(80), 1.0});
  RenderStyle style;
  style.circumcircles = true;
  CHECK(count_occurrences(render_svg(cfg, style), "class=\"circumcircle\"") == 3);
}

TEST_CASE("golden figure for the equilateral classic configuration") {
  const char* src = std::getenv("MORLEY_SOURCE_DIR");
  REQUIRE_MESSAGE(src != nullptr, "MORLEY_SOURCE_DIR not set");
  std::ifstream golden(std::string(src) + "/tests/golden/morley_equilateral.svg",
                       std::ios::binary);
  REQUIRE_MESSAGE(golden.good(), "golden file missing");
  std::ostringstream want;
  want << golden.rdbuf();
  CHECK(render_svg(sample_config()) == want.str());
}

TEST_CASE("golden record for the converse canonical pose") {
  const char* src = std::getenv("MORLEY_SOURCE_DIR");
  REQUIRE_MESSAGE(src != nullptr, "MORLEY_SOURCE_DIR not set");
  std::ifstream golden(std::string(src) + "/tests/golden/converse_100_110_90.txt",
                       std::ios::binary);
  REQUIRE_MESSAGE(golden.good(), "golden file missing");
  std::ostringstream want;
  want << golden.rdbuf();
  MorleyConfiguration cfg =
      converse_construct({deg2rad(100), deg2rad(110), deg2rad(90), 1.0});
  CHECK(to_record(cfg) == want.str());
}

TEST_CASE("render_svg validates style parameters") {
  RenderStyle bad;
  bad.margin = 0.5;
  CHECK_THROWS_AS(render_svg(sample_config(), bad), GeomError);
  bad = RenderStyle{};
  bad.width = 0;
  CHECK_THROWS_AS(render_svg(sample_config(), bad), GeomError);
}

TEST_CASE("degree boundary continuity") {
  MorleyConfiguration a =
      classic_morley(triangle_from_angles(deg2rad(60.0), deg2rad(60.0), deg2rad(60.0)));
  MorleyConfiguration b = classic_morley(
      triangle_from_angles(deg2rad(59.999999), deg2rad(60.000001), deg2rad(60.0)));
  for (size_t i = 0; i < 12; ++i)
    CHECK(distance(a.points()[i], b.points()[i]) < 1e-5 * a.diameter());
}
