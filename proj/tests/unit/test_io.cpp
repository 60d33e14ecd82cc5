#include <doctest.h>

#include <sstream>

#include "opgraph/errors.hpp"
#include "opgraph/generators.hpp"
#include "opgraph/io.hpp"

using namespace opg;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

int parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("edge list with comments and blank lines") {
    Graph g = parse("# triangle\n3 3\n0 1  # first\n\n1 2\n2 0\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
  }

  TEST_CASE("edge list errors carry line numbers") {
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("3\n") == 1);
    CHECK(parse_error_line("3 2\n0 1\n1 x\n") == 3);
    CHECK(parse_error_line("3 2\n0 1\n") == 3);
    CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);
    CHECK(parse_error_line("3 1\n0 3\n") == 2);
    CHECK(parse_error_line("3 1\n# c\n1 1\n") == 3);
    CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
    CHECK(parse_error_line("-3 1\n") == 1);
  }

  TEST_CASE("edge list round trip") {
    GeneratedGraph h = gen_hnq(12, 4);
    std::ostringstream out;
    write_edge_list(out, h.graph);
    CHECK(parse(out.str()) == h.graph);
  }

  TEST_CASE("embedding round trip") {
    GeneratedGraph h = gen_hn3(14);
    std::ostringstream out;
    write_embedding(out, *h.embedding);
    std::istringstream in(out.str());
    CHECK(parse_embedding(in) == *h.embedding);
  }

  TEST_CASE("fractions are exact strings with a display decimal") {
    Json j = fraction_json(Rational(24, 11));
    CHECK(j["exact"] == "24/11");
    CHECK(j["decimal"] == "2.181818");
  }

  TEST_CASE("analysis of a ladder") {
    Analysis a = analyze_graph(gen_ladder(8).graph, "ladder8");
    CHECK(a.status == RecognitionStatus::kOuterplanar);
    const Json& d = a.document;
    CHECK(d["schema"] == 1);
    CHECK(d["metrics"]["radius"] == 3);
    CHECK(d["q"] == 4);
    bool found = false;
    for (const auto& b : d["bounds"]) {
      if (b["name"] == "rad") {
        found = true;
        CHECK(b["holds"] == true);
        CHECK(b["bound"]["exact"] == "3/1");
      }
    }
    CHECK(found);
    CHECK(d.contains("embedding"));
  }

  TEST_CASE("analysis of K4 keeps metrics and omits the embedding") {
    Graph k4 = parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    Analysis a = analyze_graph(k4, "k4");
    CHECK(a.status == RecognitionStatus::kNotOuterplanar);
    CHECK(a.metrics_available);
    CHECK(a.document.contains("metrics"));
    CHECK_FALSE(a.document.contains("embedding"));
    CHECK(a.document["metrics"]["proximity"]["exact"] == "1/1");
  }

  TEST_CASE("analysis of a disconnected graph has no metrics") {
    Analysis a = analyze_graph(parse("4 2\n0 1\n2 3\n"), "split");
    CHECK(a.status == RecognitionStatus::kNotBiconnected);
    CHECK_FALSE(a.metrics_available);
    CHECK_FALSE(a.document.contains("metrics"));
  }

  TEST_CASE("certificate JSON uses integers only") {
    Json c = certificate_json(proximity_witness(gen_hnq(12, 4).graph));
    CHECK(c["exact_value_times8"] == 192);
    CHECK(c["guaranteed_bound_times8"] == 196);
    CHECK(c["case"] == "case1");
  }
}
