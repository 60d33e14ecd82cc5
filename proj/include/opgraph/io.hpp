#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "opgraph/enumerate.hpp"
#include "opgraph/generators.hpp"
#include "opgraph/graph.hpp"
#include "opgraph/metrics.hpp"
#include "opgraph/outerplanar.hpp"
#include "opgraph/rational.hpp"
#include "opgraph/witness.hpp"

namespace opg {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Text formats

/// Edge list: first non-comment line `n m`, then m lines `u v`. Text after
/// `#` is ignored. Throws ParseError carrying the 1-based line number.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Embedding: line `n`, then the outer order on one line, then one `i j`
/// chord (positions) per line. Same comment rules as the edge list.
OuterplaneEmbedding parse_embedding(std::istream& in);
void write_embedding(std::ostream& out, const OuterplaneEmbedding& emb);

// ---------------------------------------------------------------------------
// JSON

/// {"exact": "p/q", "decimal": "x.xxxxxx"}; the decimal is for display only.
Json fraction_json(const Rational& r);

Json metrics_json(const MetricsReport& m);
Json embedding_json(const OuterplaneEmbedding& emb);
Json certificate_json(const WitnessCertificate& c);
Json generated_json(const GeneratedGraph& gg);
Json summary_json(const VerificationSummary& s);
Json qn_json(const QnReport& r);

/// Everything analyze reports about one graph.
struct Analysis {
  Json document;
  RecognitionStatus status = RecognitionStatus::kNotOuterplanar;
  bool metrics_available = false;
};

Analysis analyze_graph(const Graph& g, const std::string& input_name);

/// One CSV row per extremal record of a verification summary.
void write_extremal_csv(std::ostream& out, const VerificationSummary& s);

}  // namespace opg
