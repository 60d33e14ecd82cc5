#include "opgraph/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "opgraph/bounds.hpp"
#include "opgraph/errors.hpp"
#include "opgraph/metrics.hpp"
#include "opgraph/witness.hpp"

namespace opg {

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Builds dissections face by face. The face on the inner side of a base
// (a, b) is a = x_0 < x_1 < ... < x_m = b; every gap of two or more positions
// becomes a chord and a new base. Each dissection arises exactly once.
class DissectionWalker {
 public:
  DissectionWalker(int n, const EnumerateOptions& opts, const DissectionVisitor& visit)
      : n_(n), opts_(opts), visit_(visit) {
    face_limit_ = opts.triangulations_only ? 3 : std::min(n, opts.max_face.value_or(n));
  }

  void run() {
    if (face_limit_ < 3) return;
    pending_.emplace_back(0, n_ - 1);
    next_base();
  }

 private:
  void next_base() {
    if (pending_.empty()) {
      emit();
      return;
    }
    auto base = pending_.back();
    pending_.pop_back();
    face_.assign(1, base.first);
    extend(base.first, base.second, base.first + 1);
    pending_.push_back(base);
  }

  // face_ holds x_0 .. x_t; pick x_{t+1} from [from, b-1] or close the face at b.
  void extend(int a, int b, int from) {
    const int closed_len = static_cast<int>(face_.size()) + 1;
    if (face_.size() >= 2 && closed_len <= face_limit_) close(b);
    if (closed_len + 1 > face_limit_) return;
    for (int x = from; x < b; ++x) {
      face_.push_back(x);
      extend(a, b, x + 1);
      face_.pop_back();
    }
  }

  void close(int b) {
    std::vector<int> face = face_;
    face.push_back(b);
    const std::size_t chords_before = chords_.size();
    const std::size_t pending_before = pending_.size();
    for (std::size_t t = 0; t + 1 < face.size(); ++t) {
      if (face[t + 1] - face[t] >= 2) {
        chords_.push_back({face[t], face[t + 1]});
        pending_.emplace_back(face[t], face[t + 1]);
      }
    }
    lengths_.push_back(static_cast<int>(face.size()));
    next_base();
    lengths_.pop_back();
    chords_.resize(chords_before);
    pending_.resize(pending_before);
    face_ = std::move(face);
    face_.pop_back();
  }

  void emit() {
    Dissection d;
    d.n = n_;
    d.chords = chords_;
    std::sort(d.chords.begin(), d.chords.end());
    d.max_face = *std::max_element(lengths_.begin(), lengths_.end());
    if (opts_.up_to_symmetry && !is_canonical(d)) return;
    visit_(d);
  }

  int n_;
  const EnumerateOptions& opts_;
  const DissectionVisitor& visit_;
  int face_limit_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<Chord> chords_;
  std::vector<int> face_;
  std::vector<int> lengths_;
};

void check_order(int n, int cap) {
  if (n < 3) throw DomainError("polygon needs n >= 3");
  if (n > cap) throw CapExceeded("n=" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
}

// Chord list after mapping every position p to (r + s*p) mod n, s = +-1.
void transform(const std::vector<Chord>& in, int n, int r, bool reflect, std::vector<Chord>& out) {
  out.clear();
  for (const Chord& c : in) {
    int a = reflect ? (r - c.lo + n) % n : (c.lo + r) % n;
    int b = reflect ? (r - c.hi + n) % n : (c.hi + r) % n;
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

void for_each_dissection(int n, const EnumerateOptions& opts, const DissectionVisitor& visit) {
  check_order(n, opts.cap);
  DissectionWalker(n, opts, visit).run();
}

std::vector<Dissection> enumerate_dissections(int n, const EnumerateOptions& opts) {
  std::vector<Dissection> out;
  for_each_dissection(n, opts, [&](const Dissection& d) { out.push_back(d); });
  return out;
}

std::uint64_t count_dissections(int n, const EnumerateOptions& opts) {
  std::uint64_t count = 0;
  for_each_dissection(n, opts, [&](const Dissection&) { ++count; });
  return count;
}

std::uint64_t count_dissections(int n, const EnumerateOptions& opts, int workers) {
  check_order(n, opts.cap);
  workers = std::max(1, workers);
  if (workers == 1) return count_dissections(n, opts);
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      EnumerateOptions labeled = opts;
      labeled.up_to_symmetry = false;
      for_each_dissection(n, labeled, [&](const Dissection& d) {
        if (shard_key(d) % workers != w) return;
        if (opts.up_to_symmetry && !is_canonical(d)) return;
        ++counts[w];
      });
    });
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

Dissection canonical_form(const Dissection& d) {
  Dissection best = d;
  std::sort(best.chords.begin(), best.chords.end());
  std::vector<Chord> image;
  for (int r = 0; r < d.n; ++r) {
    for (bool reflect : {false, true}) {
      transform(d.chords, d.n, r, reflect, image);
      if (image < best.chords) best.chords = image;
    }
  }
  return best;
}

bool is_canonical(const Dissection& d) {
  std::vector<Chord> image;
  for (int r = 0; r < d.n; ++r) {
    for (bool reflect : {false, true}) {
      transform(d.chords, d.n, r, reflect, image);
      if (image < d.chords) return false;
    }
  }
  return true;
}

Graph dissection_graph(const Dissection& d) {
  std::vector<Edge> edges;
  edges.reserve(d.n + d.chords.size());
  for (int i = 0; i < d.n; ++i) edges.emplace_back(i, (i + 1) % d.n);
  for (const Chord& c : d.chords) edges.emplace_back(c.lo, c.hi);
  return Graph::from_edges(d.n, edges);
}

OuterplaneEmbedding dissection_embedding(const Dissection& d) {
  OuterplaneEmbedding emb;
  emb.outer_order.resize(d.n);
  for (int i = 0; i < d.n; ++i) emb.outer_order[i] = i;
  emb.chords = d.chords;
  return emb;
}

int shard_key(const Dissection& d) { return d.chords.empty() ? 0 : d.chords.front().lo; }

std::string format_chords(const std::vector<Chord>& chords) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    if (i) os << ' ';
    os << chords[i].lo << '-' << chords[i].hi;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Verification

void CheckTally::merge(const CheckTally& other) {
  checked += other.checked;
  passed += other.passed;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  std::sort(violations.begin(), violations.end(),
            [](const Violation& a, const Violation& b) { return a.chords < b.chords; });
  if (violations.size() > kStoredViolations) violations.resize(kStoredViolations);
}

namespace {

void record(CheckTally& tally, bool ok, const Dissection& d, const std::string& detail) {
  ++tally.checked;
  if (ok) {
    ++tally.passed;
    return;
  }
  CheckTally one;
  one.checked = 0;
  one.violations.push_back({d.chords, detail});
  tally.merge(one);
}

// Keeps the record with the larger (or, with prefer_smaller, smaller) key;
// ties go to the lexicographically smaller chord list.
void keep_extremal(std::optional<ExtremalRecord>& slot, const ExtremalRecord& cand, const Rational& key_cand,
                   bool prefer_smaller, Rational ExtremalRecord::*key) {
  if (!slot) {
    slot = cand;
    return;
  }
  const Rational& cur = (*slot).*key;
  bool better = prefer_smaller ? key_cand < cur : key_cand > cur;
  if (better || (key_cand == cur && cand.chords < slot->chords)) slot = cand;
}

std::string describe(const Rational& lhs, const char* rel, const Rational& rhs) {
  return lhs.str() + " " + rel + " " + rhs.str();
}

}  // namespace

void verify_one(const Dissection& d, const VerifyOptions& opts, VerificationSummary& s) {
  const int n = d.n;
  const int q = d.max_face;
  const Graph g = dissection_graph(d);
  const OuterplaneEmbedding emb = dissection_embedding(d);
  const MetricsReport m = global_metrics(g);
  const int rad_bound = radius_bound(n);
  ++s.graphs_checked;

  // Proximity bound and its witness.
  const Rational bound = prox_bound_2conn(n, q);
  record(s.proximity_bound, m.proximity <= bound, d, "pi " + describe(m.proximity, ">", bound));
  try {
    WitnessCertificate cert = proximity_witness(g, emb);
    record(s.proximity_witness, cert.holds(), d,
           "8*sigma(" + std::to_string(cert.vertex) + ")=" + std::to_string(8 * cert.exact_value) + " > " +
               std::to_string(cert.guaranteed_bound_times8));
  } catch (const std::exception& e) {
    record(s.proximity_witness, false, d, std::string("construction failed: ") + e.what());
  }

  // Radius under the face-length precondition.
  if (n <= opts.radius_cap && 4 * q <= n + 2) {
    record(s.radius_bound, m.radius <= rad_bound, d,
           "rad " + std::to_string(m.radius) + " > " + std::to_string(rad_bound));
    try {
      WitnessCertificate cert = radius_witness(g, emb);
      record(s.radius_witness, cert.holds(), d,
             "ecc(" + std::to_string(cert.vertex) + ")=" + std::to_string(cert.exact_value) + " > " +
                 std::to_string(rad_bound));
    } catch (const std::exception& e) {
      record(s.radius_witness, false, d, std::string("construction failed: ") + e.what());
    }
  }

  // Maximal outerplanar graphs are chordal.
  if (q == 3) {
    record(s.mop_radius, m.radius <= rad_bound, d,
           "rad " + std::to_string(m.radius) + " > " + std::to_string(rad_bound));
    RadiusInterval iv = chordal_radius_interval(m.diameter);
    record(s.chordal_interval, iv.contains(m.radius), d,
           "rad " + std::to_string(m.radius) + " outside [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
               "] for diam " + std::to_string(m.diameter));
  }

  ExtremalRecord prox{d.chords, q, m.proximity, bound - m.proximity};
  keep_extremal(s.max_proximity, prox, prox.value, false, &ExtremalRecord::value);
  keep_extremal(s.tightest_proximity, prox, prox.gap, true, &ExtremalRecord::gap);
  ExtremalRecord rad{d.chords, q, Rational(m.radius), Rational(rad_bound - m.radius)};
  keep_extremal(s.max_radius, rad, rad.value, false, &ExtremalRecord::value);

  FaceBucket& bucket = s.face_buckets[q];
  ++bucket.graphs;
  if (m.radius > rad_bound) {
    ++bucket.radius_exceeded;
    if (!bucket.first_exceeding || d.chords < *bucket.first_exceeding) bucket.first_exceeding = d.chords;
  }
}

bool VerificationSummary::all_clean() const {
  return proximity_bound.clean() && proximity_witness.clean() && radius_bound.clean() &&
         radius_witness.clean() && mop_radius.clean() && chordal_interval.clean();
}

void VerificationSummary::merge(const VerificationSummary& o) {
  labeled_seen += o.labeled_seen;
  graphs_checked += o.graphs_checked;
  proximity_bound.merge(o.proximity_bound);
  proximity_witness.merge(o.proximity_witness);
  radius_bound.merge(o.radius_bound);
  radius_witness.merge(o.radius_witness);
  mop_radius.merge(o.mop_radius);
  chordal_interval.merge(o.chordal_interval);
  if (o.max_proximity) keep_extremal(max_proximity, *o.max_proximity, o.max_proximity->value, false, &ExtremalRecord::value);
  if (o.tightest_proximity) keep_extremal(tightest_proximity, *o.tightest_proximity, o.tightest_proximity->gap, true, &ExtremalRecord::gap);
  if (o.max_radius) keep_extremal(max_radius, *o.max_radius, o.max_radius->value, false, &ExtremalRecord::value);
  for (const auto& [q, b] : o.face_buckets) {
    FaceBucket& mine = face_buckets[q];
    mine.graphs += b.graphs;
    mine.radius_exceeded += b.radius_exceeded;
    if (b.first_exceeding && (!mine.first_exceeding || *b.first_exceeding < *mine.first_exceeding)) {
      mine.first_exceeding = b.first_exceeding;
    }
  }
}

VerificationSummary verify_bounds_over(int n, const VerifyOptions& opts) {
  check_order(n, opts.enumeration.cap);
  const int workers = std::max(1, opts.workers);

  // Every worker walks the full labeled stream and keeps its own shard, so
  // the per-shard folds are independent of the worker count.
  auto run_shard = [&](int worker, VerificationSummary& out) {
    out.n = n;
    EnumerateOptions labeled = opts.enumeration;
    labeled.up_to_symmetry = false;
    for_each_dissection(n, labeled, [&](const Dissection& d) {
      if (shard_key(d) % workers != worker) return;
      ++out.labeled_seen;
      if (opts.enumeration.up_to_symmetry && !is_canonical(d)) return;
      verify_one(d, opts, out);
    });
  };

  std::vector<VerificationSummary> shards(workers);
  if (workers == 1) {
    run_shard(0, shards[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_shard, w, std::ref(shards[w]));
    for (auto& t : pool) t.join();
  }
  VerificationSummary total;
  total.n = n;
  for (const auto& s : shards) total.merge(s);
  return total;
}

QnReport qn_from_summary(const VerificationSummary& s) {
  QnReport r;
  r.n = s.n;
  r.radius_bound = radius_bound(s.n);
  r.qn = s.n;
  for (const auto& [q, b] : s.face_buckets) {
    r.graphs_scanned += b.graphs;
    if (b.radius_exceeded > 0 && q - 1 < r.qn) {
      r.qn = q - 1;
      Dissection w;
      w.n = s.n;
      w.chords = *b.first_exceeding;
      w.max_face = q;
      r.failing_witness = w;
      r.failing_radius = global_metrics(dissection_graph(w)).radius;
    }
  }
  for (const auto& [q, b] : s.face_buckets) {
    if (q <= r.qn) r.graphs_within_qn += b.graphs;
  }
  r.lower_bracket = (s.n + 2) / 4;
  r.lower_bracket_holds = r.qn >= r.lower_bracket;
  r.upper_bracket_holds = 2 * r.qn < s.n + 6;
  r.upper_bracket_nonstrict_holds = 2 * r.qn <= s.n + 6;
  r.literal_upper_reading_holds = 4 * r.qn <= s.n + 2;
  return r;
}

QnReport estimate_qn(int n, int workers) {
  VerifyOptions opts;
  opts.workers = workers;
  opts.radius_cap = 0;
  return qn_from_summary(verify_bounds_over(n, opts));
}

}  // namespace opg
