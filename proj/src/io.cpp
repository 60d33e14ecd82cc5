#include "opgraph/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "opgraph/bounds.hpp"
#include "opgraph/errors.hpp"

namespace opg {

namespace {

// Splits the input into non-empty, comment-stripped lines of integers.
class IntLineReader {
 public:
  explicit IntLineReader(std::istream& in) : in_(in) {}

  // Next content line, or false at end of input.
  bool next(std::vector<long long>& values) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream tokens(raw);
      values.clear();
      std::string tok;
      while (tokens >> tok) {
        long long v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size()) {
          throw ParseError(line_, "expected an integer, found '" + tok + "'");
        }
        values.push_back(v);
      }
      if (!values.empty()) return true;
    }
    return false;
  }

  int line() const noexcept { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

void expect_count(const IntLineReader& r, const std::vector<long long>& v, std::size_t count, const char* what) {
  if (v.size() != count) {
    throw ParseError(r.line(), std::string("expected ") + what + ", found " + std::to_string(v.size()) + " values");
  }
}

int as_int(const IntLineReader& r, long long v, const char* what) {
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    throw ParseError(r.line(), std::string(what) + " out of range: " + std::to_string(v));
  }
  return static_cast<int>(v);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  IntLineReader reader(in);
  std::vector<long long> v;
  if (!reader.next(v)) throw ParseError(reader.line() + 1, "missing header 'n m'");
  expect_count(reader, v, 2, "header 'n m'");
  const int n = as_int(reader, v[0], "vertex count");
  const int m = as_int(reader, v[1], "edge count");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!reader.next(v)) {
      throw ParseError(reader.line() + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    expect_count(reader, v, 2, "edge 'u v'");
    const int a = as_int(reader, v[0], "vertex id");
    const int b = as_int(reader, v[1], "vertex id");
    if (a >= n || b >= n) throw ParseError(reader.line(), "vertex id not below n=" + std::to_string(n));
    if (a == b) throw ParseError(reader.line(), "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  if (reader.next(v)) throw ParseError(reader.line(), "more edge lines than the header's m=" + std::to_string(m));
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

OuterplaneEmbedding parse_embedding(std::istream& in) {
  IntLineReader reader(in);
  std::vector<long long> v;
  if (!reader.next(v)) throw ParseError(reader.line() + 1, "missing vertex count");
  expect_count(reader, v, 1, "vertex count");
  const int n = as_int(reader, v[0], "vertex count");

  OuterplaneEmbedding emb;
  if (!reader.next(v)) throw ParseError(reader.line() + 1, "missing outer order");
  expect_count(reader, v, static_cast<std::size_t>(n), "outer order of n vertices");
  for (long long x : v) emb.outer_order.push_back(as_int(reader, x, "vertex id"));
  while (reader.next(v)) {
    expect_count(reader, v, 2, "chord 'i j'");
    int a = as_int(reader, v[0], "position"), b = as_int(reader, v[1], "position");
    emb.chords.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(emb.chords.begin(), emb.chords.end());
  return emb;
}

void write_embedding(std::ostream& out, const OuterplaneEmbedding& emb) {
  out << emb.order() << '\n';
  for (int i = 0; i < emb.order(); ++i) out << (i ? " " : "") << emb.outer_order[i];
  out << '\n';
  for (const Chord& c : emb.chords) out << c.lo << ' ' << c.hi << '\n';
}

// ---------------------------------------------------------------------------
// JSON

Json fraction_json(const Rational& r) { return Json{{"exact", r.str()}, {"decimal", r.decimal(6)}}; }

namespace {

Json chords_json(const std::vector<Chord>& chords) {
  Json arr = Json::array();
  for (const Chord& c : chords) arr.push_back({c.lo, c.hi});
  return arr;
}

Json bound_check(const std::string& name, const Rational& bound, const Rational& observed, bool applies) {
  return Json{{"name", name},
              {"bound", fraction_json(bound)},
              {"observed", fraction_json(observed)},
              {"hypothesis_met", applies},
              {"holds", observed <= bound},
              {"gap", fraction_json(bound - observed)}};
}

}  // namespace

Json metrics_json(const MetricsReport& m) {
  return Json{{"transmission", m.transmission}, {"eccentricity", m.eccentricity},
              {"proximity", fraction_json(m.proximity)}, {"remoteness", fraction_json(m.remoteness)},
              {"radius", m.radius}, {"diameter", m.diameter},
              {"medians", m.medians}, {"centers", m.centers}};
}

Json embedding_json(const OuterplaneEmbedding& emb) {
  return Json{{"outer_order", emb.outer_order}, {"chords", chords_json(emb.chords)}};
}

Json certificate_json(const WitnessCertificate& c) {
  Json j{{"schema", kJsonSchemaVersion},
         {"kind", to_string(c.kind)},
         {"n", c.n},
         {"vertex", c.vertex},
         {"exact_value", c.exact_value},
         {"exact_value_times8", 8 * c.exact_value},
         {"guaranteed_bound_times8", c.guaranteed_bound_times8},
         {"holds", c.holds()},
         {"k", c.k},
         {"q", c.q},
         {"p", c.p},
         {"face_vertices", c.face_vertices},
         {"central_face_index", c.central_face_index}};
  if (c.proximity_case) j["case"] = to_string(*c.proximity_case);
  if (c.radius) {
    j["ell"] = c.radius->ell;
    j["j"] = c.radius->j;
    j["chosen"] = c.radius->chose_v_ell ? "v_ell" : "v_j";
    j["reversed"] = c.radius->reversed;
  }
  return j;
}

Json generated_json(const GeneratedGraph& gg) {
  Json params{{"n", gg.params.n}};
  if (gg.params.q) params["q"] = *gg.params.q;
  if (gg.params.k) params["k"] = *gg.params.k;
  if (gg.params.k_prime) params["k_prime"] = *gg.params.k_prime;
  Json edges = Json::array();
  for (auto [u, v] : gg.graph.edges()) edges.push_back({u, v});
  Json j{{"schema", kJsonSchemaVersion}, {"family", to_string(gg.family)}, {"params", params},
         {"n", gg.graph.order()},        {"edges", edges},                  {"labels", gg.labels}};
  if (gg.embedding) j["embedding"] = embedding_json(*gg.embedding);
  return j;
}

namespace {

Json tally_json(const CheckTally& t) {
  Json v = Json::array();
  for (const Violation& x : t.violations) v.push_back({{"chords", chords_json(x.chords)}, {"detail", x.detail}});
  return Json{{"checked", t.checked}, {"passed", t.passed}, {"violations", v}};
}

Json record_json(const std::optional<ExtremalRecord>& r) {
  if (!r) return nullptr;
  return Json{{"chords", chords_json(r->chords)}, {"q", r->q}, {"value", fraction_json(r->value)},
              {"gap", fraction_json(r->gap)}};
}

}  // namespace

Json summary_json(const VerificationSummary& s) {
  Json buckets = Json::array();
  for (const auto& [q, b] : s.face_buckets) {
    Json e{{"max_face", q}, {"graphs", b.graphs}, {"radius_exceeded", b.radius_exceeded}};
    if (b.first_exceeding) e["first_exceeding"] = chords_json(*b.first_exceeding);
    buckets.push_back(e);
  }
  return Json{{"schema", kJsonSchemaVersion},
              {"n", s.n},
              {"labeled_seen", s.labeled_seen},
              {"graphs_checked", s.graphs_checked},
              {"all_clean", s.all_clean()},
              {"checks",
               {{"proximity_bound", tally_json(s.proximity_bound)},
                {"proximity_witness", tally_json(s.proximity_witness)},
                {"radius_bound", tally_json(s.radius_bound)},
                {"radius_witness", tally_json(s.radius_witness)},
                {"mop_radius", tally_json(s.mop_radius)},
                {"chordal_interval", tally_json(s.chordal_interval)}}},
              {"extremal",
               {{"max_proximity", record_json(s.max_proximity)},
                {"tightest_proximity", record_json(s.tightest_proximity)},
                {"max_radius", record_json(s.max_radius)}}},
              {"face_buckets", buckets},
              {"qn", qn_from_summary(s).qn}};
}

Json qn_json(const QnReport& r) {
  Json j{{"schema", kJsonSchemaVersion},
         {"n", r.n},
         {"qn", r.qn},
         {"radius_bound", r.radius_bound},
         {"graphs_scanned", r.graphs_scanned},
         {"graphs_within_qn", r.graphs_within_qn},
         {"lower_bracket", r.lower_bracket},
         {"lower_bracket_holds", r.lower_bracket_holds},
         {"upper_bracket_holds", r.upper_bracket_holds},
         {"upper_bracket_nonstrict_holds", r.upper_bracket_nonstrict_holds},
         {"literal_upper_reading_holds", r.literal_upper_reading_holds}};
  if (r.failing_witness) {
    j["failing_witness"] = {{"max_face", r.failing_witness->max_face},
                            {"chords", chords_json(r.failing_witness->chords)},
                            {"radius", *r.failing_radius}};
  } else {
    j["failing_witness"] = nullptr;
  }
  return j;
}

Analysis analyze_graph(const Graph& g, const std::string& input_name) {
  Analysis a;
  Json& doc = a.document;
  const int n = g.order();
  doc["schema"] = kJsonSchemaVersion;
  doc["input"] = {{"source", input_name}, {"n", n}, {"m", g.size()}};

  std::optional<MetricsReport> m;
  if (n >= 2 && is_connected(g)) {
    m = global_metrics(g);
    a.metrics_available = true;
    doc["metrics"] = metrics_json(*m);
  }

  Recognition rec = recognize(g);
  a.status = rec.status;
  doc["outerplanar"] = {{"status", rec.ok() ? "outerplanar"
                                   : rec.status == RecognitionStatus::kNotBiconnected ? "not_biconnected"
                                                                                      : "not_outerplanar"},
                        {"reason", rec.reason}};

  Json bounds = Json::array();
  if (m) {
    ClassicalBoundsReport c = check_classical_bounds(g, *m);
    bounds.push_back(bound_check("proximity_order", c.proximity_upper, m->proximity, true));
    bounds.push_back(bound_check("remoteness_order", c.remoteness_upper, m->remoteness, true));
    bounds.push_back(bound_check("radius_order", c.radius_upper, Rational(m->radius), true));
  }
  if (rec.ok()) {
    const OuterplaneEmbedding& emb = *rec.embedding;
    const int q = max_face_length(emb);
    doc["embedding"] = embedding_json(emb);
    doc["q"] = q;
    bounds.push_back(bound_check("prox2c", prox_bound_2conn(n, q), m->proximity, true));
    bounds.push_back(bound_check("proxmop", prox_bound_mop(n), m->proximity, q == 3));
    bounds.push_back(bound_check("rho", remoteness_bound(n), m->remoteness, true));
    bounds.push_back(bound_check("rad", Rational(radius_bound(n)), Rational(m->radius), 4 * q <= n + 2));
    if (q == 3) {
      RadiusInterval iv = chordal_radius_interval(m->diameter);
      doc["chordal_interval"] = {{"lo", iv.lo}, {"hi", iv.hi}, {"contains_radius", iv.contains(m->radius)}};
    }
  }
  doc["bounds"] = bounds;
  return a;
}

void write_extremal_csv(std::ostream& out, const VerificationSummary& s) {
  out << "record,n,q,value,value_decimal,gap,gap_decimal,chords\n";
  auto row = [&](const char* name, const std::optional<ExtremalRecord>& r) {
    if (!r) return;
    out << name << ',' << s.n << ',' << r->q << ',' << r->value.str() << ',' << r->value.decimal(6) << ','
        << r->gap.str() << ',' << r->gap.decimal(6) << ',' << format_chords(r->chords) << '\n';
  };
  row("max_proximity", s.max_proximity);
  row("tightest_proximity", s.tightest_proximity);
  row("max_radius", s.max_radius);
}

}  // namespace opg
