#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opgraph/graph.hpp"
#include "opgraph/outerplanar.hpp"
#include "opgraph/rational.hpp"

namespace opg {

inline constexpr int kEnumerationCap = 16;

/// Non-crossing diagonals of the polygon 0..n-1. Together with the polygon
/// sides this is exactly a 2-connected outerplanar graph whose outer cycle is
/// 0, 1, ..., n-1.
struct Dissection {
  int n = 0;
  std::vector<Chord> chords;  // sorted
  int max_face = 0;           // longest interior face

  friend bool operator==(const Dissection& a, const Dissection& b) { return a.n == b.n && a.chords == b.chords; }
};

struct EnumerateOptions {
  std::optional<int> max_face;
  bool triangulations_only = false;
  bool up_to_symmetry = false;  // keep only dihedrally minimal chord sets
  int cap = kEnumerationCap;
};

using DissectionVisitor = std::function<void(const Dissection&)>;

/// Streams every dissection of the n-gon meeting the filters exactly once,
/// in a fixed order. Throws CapExceeded above opts.cap and DomainError for n < 3.
void for_each_dissection(int n, const EnumerateOptions& opts, const DissectionVisitor& visit);

std::vector<Dissection> enumerate_dissections(int n, const EnumerateOptions& opts);
std::uint64_t count_dissections(int n, const EnumerateOptions& opts);

/// Same count, split across `workers` threads by shard_key.
std::uint64_t count_dissections(int n, const EnumerateOptions& opts, int workers);

/// Lexicographically smallest chord list over the 2n rotations/reflections.
Dissection canonical_form(const Dissection& d);
bool is_canonical(const Dissection& d);

Graph dissection_graph(const Dissection& d);
OuterplaneEmbedding dissection_embedding(const Dissection& d);

/// Shard key used to split the stream across workers.
int shard_key(const Dissection& d);

std::string format_chords(const std::vector<Chord>& chords);

// ---------------------------------------------------------------------------
// Exhaustive verification

struct Violation {
  std::vector<Chord> chords;
  std::string detail;
};

struct CheckTally {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::vector<Violation> violations;  // the smallest chord sets, at most kStoredViolations

  static constexpr std::size_t kStoredViolations = 32;
  bool clean() const noexcept { return checked == passed; }
  void merge(const CheckTally& other);
};

struct ExtremalRecord {
  std::vector<Chord> chords;
  int q = 0;
  Rational value;  // proximity, or radius as an integer
  Rational gap;    // bound minus value
};

/// Per max-face-length counts used for the q_n scan.
struct FaceBucket {
  std::uint64_t graphs = 0;
  std::uint64_t radius_exceeded = 0;  // rad > floor(n/4) + 1
  std::optional<std::vector<Chord>> first_exceeding;
};

struct VerificationSummary {
  int n = 0;
  std::uint64_t labeled_seen = 0;  // dissections enumerated before the symmetry filter
  std::uint64_t graphs_checked = 0;

  CheckTally proximity_bound;    // pi <= prox_bound_2conn(n, q)
  CheckTally proximity_witness;  // 8 sigma(w) <= n^2 + 4n + k^2 - 4k + 4
  CheckTally radius_bound;       // q <= (n+2)/4  =>  rad <= floor(n/4) + 1
  CheckTally radius_witness;     // ... and the constructed u has small eccentricity
  CheckTally mop_radius;         // triangulations: rad <= floor(n/4) + 1
  CheckTally chordal_interval;   // triangulations: 2 rad - 2 <= diam <= 2 rad

  std::optional<ExtremalRecord> max_proximity;
  std::optional<ExtremalRecord> tightest_proximity;  // smallest gap to the bound
  std::optional<ExtremalRecord> max_radius;

  std::map<int, FaceBucket> face_buckets;

  bool all_clean() const;
  void merge(const VerificationSummary& other);
};

struct VerifyOptions {
  EnumerateOptions enumeration{.up_to_symmetry = true};
  int radius_cap = 14;  // radius checks only for n <= radius_cap
  int workers = 1;
};

VerificationSummary verify_bounds_over(int n, const VerifyOptions& opts = {});

/// Folds one graph into a summary (exposed for testing and custom drivers).
void verify_one(const Dissection& d, const VerifyOptions& opts, VerificationSummary& summary);

struct QnReport {
  int n = 0;
  int qn = 0;
  int radius_bound = 0;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t graphs_within_qn = 0;  // all of these have rad <= radius_bound
  std::optional<Dissection> failing_witness;  // face length qn + 1, rad > radius_bound
  std::optional<int> failing_radius;
  int lower_bracket = 0;           // floor((n+2)/4)
  bool lower_bracket_holds = false;  // qn >= floor((n+2)/4)
  bool upper_bracket_holds = false;  // qn < n/2 + 3
  bool upper_bracket_nonstrict_holds = false;  // qn <= n/2 + 3
  bool literal_upper_reading_holds = false;  // qn <= (n+2)/4
};

QnReport qn_from_summary(const VerificationSummary& s);
QnReport estimate_qn(int n, int workers = 1);

}  // namespace opg
