#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "pentagon/corpus.hpp"
#include "pentagon/enumeration.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/io.hpp"

using namespace pentagon;
using testutil::data_path;
using testutil::throws_with;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Magma parse_magma(const std::string& text) {
  std::istringstream in(text);
  return io::read_magma(in);
}

PairMap parse_pairmap(const std::string& text) {
  std::istringstream in(text);
  return io::read_pairmap(in);
}

std::string parse_error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    REQUIRE(e.code() == errc::parse);
    return e.what();
  }
  FAIL("no parse error raised");
  return "";
}

}  // namespace

TEST_CASE("canonical group files round trip byte for byte") {
  for (const char* name : {"z6", "v4", "s3", "q8"}) {
    std::string path = data_path(std::string{"groups/"} + name + ".group");
    std::string bytes = slurp(path);
    Magma m = io::read_magma_file(path);
    CHECK(io::to_string(m) == bytes);
    CHECK(m.name == name);
  }
}

TEST_CASE("canonical pair map files round trip byte for byte") {
  std::string path = data_path("examples/parity6.pairmap");
  std::string bytes = slurp(path);
  CHECK(io::to_string(io::read_pairmap_file(path)) == bytes);
}

TEST_CASE("parser tolerates comments, blank lines, commas and tabs") {
  Magma m = parse_magma(
      "# a comment\n"
      "\n"
      "name      weird\n"
      "n 2\n"
      "table\n"
      "0,1\n"
      "\t1  ,\t0\n"
      "# trailing comment\n");
  CHECK(m.name == "weird");
  CHECK(m.table == std::vector<element_t>{0, 1, 1, 0});

  PairMap s = parse_pairmap(
      "n 2\ndot\n0 1\n0, 1\nstar\n# rows\n0\t0\n1 1\n");
  CHECK(s.name.empty());
  CHECK(s.dot_table == std::vector<element_t>{0, 1, 0, 1});
}

TEST_CASE("serialization is canonical") {
  Magma m = parse_magma("n 2\ntable\n0, 1\n1,\t0\n");
  CHECK(io::to_string(m) == "n 2\ntable\n0 1\n1 0\n");
  m.name = "xor";
  CHECK(io::to_string(m) == "name xor\nn 2\ntable\n0 1\n1 0\n");
}

TEST_CASE("parse errors carry 1-based line numbers") {
  CHECK(parse_error_message([] { parse_magma("n 2\ntable\n0 1\n1 7\n"); }) ==
        "line 4: entry 7 at (1,1) outside [0,2)");
  CHECK(parse_error_message([] { parse_magma("n 2\ntable\n0 1 1\n1 0\n"); }) ==
        "line 3: row 0 has 3 entries, expected 2");
  CHECK(parse_error_message([] { parse_magma("n x\ntable\n"); }) ==
        "line 1: expected an integer, got 'x'");
  CHECK(parse_error_message([] { parse_magma("n 2\n0 1\n1 0\n"); }) ==
        "line 2: expected 'table', got '0 1'");
  CHECK(parse_error_message([] { parse_magma("table\n0\n"); }) ==
        "line 1: expected 'n', got 'table'");
  CHECK(parse_error_message([] { parse_magma("n 2\ntable\n0 1\n"); }) ==
        "line 3: unexpected end of file");
  CHECK(parse_error_message([] {
          parse_magma("n 2\ntable\n0 1\n1 0\nextra junk\n");
        }) == "line 5: unexpected content 'extra junk'");
  CHECK(parse_error_message([] { parse_magma("name a b\nn 1\ntable\n0\n"); }) ==
        "line 1: name takes exactly one word");
  CHECK(parse_error_message([] { parse_magma("n 0\ntable\n"); }) ==
        "line 1: carrier size must be positive");
  // a second name line is not folded into the header
  CHECK(parse_error_message([] {
          parse_magma("name a\nname b\nn 1\ntable\n0\n");
        }) == "line 2: expected 'n', got 'name'");
}

TEST_CASE("pair map files need both tables in order") {
  CHECK(parse_error_message([] { parse_pairmap("n 2\nstar\n0 0\n1 1\n"); }) ==
        "line 2: expected 'dot', got 'star'");
  CHECK(parse_error_message([] {
          parse_pairmap("n 2\ndot\n0 1\n0 1\n0 0\n1 1\n");
        }) == "line 5: expected 'star', got '0 0'");
}

TEST_CASE("missing files raise io errors") {
  CHECK(throws_with(errc::io, [] { io::read_magma_file("/nonexistent.group"); }));
  CHECK(throws_with(errc::io, [] { io::read_pairmap_file("/nonexistent.pairmap"); }));
}

TEST_CASE("write_group relabels the identity to index zero") {
  Group g = group_from_magma(validate_magma(2, {{1, 0}, {0, 1}}, "z2"));
  std::ostringstream out;
  io::write_group(out, g);
  CHECK(out.str() == "name z2\nn 2\ntable\n0 1\n1 0\n");
}

TEST_CASE("structured reports serialize field by field") {
  EnumerationReport report = classify(enumerate_with_dot(cyclic(2).magma));
  std::ostringstream out;
  io::write_report(out, report, io::Format::structured);
  CHECK(out.str() ==
        "carrier z2\n"
        "method raw\n"
        "count 2\n"
        "solution 0\n"
        "dot\n0 1\n1 0\n"
        "star\n0 0\n0 0\n"
        "profile solution=1 reversed=0 invertible=0 commutative=1 "
        "cocommutative=0\n"
        "solution 1\n"
        "dot\n0 1\n1 0\n"
        "star\n0 1\n0 1\n"
        "profile solution=1 reversed=1 invertible=1 commutative=1 "
        "cocommutative=1\n"
        "classes 2\n"
        "class_of 0 1\n"
        "representatives 0 1\n");
}

TEST_CASE("text reports summarize the same data") {
  EnumerationReport report = classify(enumerate_with_dot(cyclic(2).magma));
  std::ostringstream out;
  io::write_report(out, report, io::Format::text);
  CHECK(out.str() ==
        "carrier: z2\n"
        "method: raw\n"
        "solutions: 2\n"
        "[0] solution=1 reversed=0 invertible=0 commutative=1 cocommutative=0\n"
        "[1] solution=1 reversed=1 invertible=1 commutative=1 cocommutative=1\n"
        "classes: 2\n"
        "class 0: 0\n"
        "class 1: 1\n");
}
