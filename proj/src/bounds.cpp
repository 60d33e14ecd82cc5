#include "opgraph/bounds.hpp"

#include "opgraph/errors.hpp"

namespace opg {

namespace {

void require_order(int n) {
  if (n < 3) throw DomainError("bound needs n >= 3, got n=" + std::to_string(n));
}

}  // namespace

Rational prox_bound_2conn(int n, int q) {
  require_order(n);
  if (q < 3 || q > n) {
    throw DomainError("face length q must satisfy 3 <= q <= n, got q=" + std::to_string(q));
  }
  const std::int64_t Q = q;
  return Rational(n + 5, 8) + Rational(Q * Q - 4 * Q + 9, 8 * std::int64_t(n - 1));
}

Rational prox_bound_mop(int n) {
  require_order(n);
  return Rational(n + 5, 8) + Rational(3, 4 * std::int64_t(n - 1));
}

Rational remoteness_bound(int n) {
  require_order(n);
  Rational b(n + 1, 4);
  if (n % 2 == 0) b += Rational(1, 4 * std::int64_t(n - 1));
  return b;
}

int radius_bound(int n) {
  require_order(n);
  return n / 4 + 1;
}

RadiusInterval chordal_radius_interval(int diameter) {
  if (diameter < 0) throw DomainError("diameter must be nonnegative");
  return {(diameter + 1) / 2, (diameter + 2) / 2};
}

BoundValue evaluate_bound(BoundKind kind, int n, std::optional<int> q) {
  BoundValue b;
  b.source = kind;
  b.n = n;
  switch (kind) {
    case BoundKind::kProximity2Connected:
      if (!q) throw DomainError("prox2c needs a face length q");
      b.q = q;
      b.value = prox_bound_2conn(n, *q);
      break;
    case BoundKind::kProximityMaximal:
      b.value = prox_bound_mop(n);
      break;
    case BoundKind::kRemoteness:
      b.value = remoteness_bound(n);
      break;
    case BoundKind::kRadius:
      b.value = Rational(radius_bound(n));
      break;
  }
  return b;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kProximity2Connected: return "prox2c";
    case BoundKind::kProximityMaximal: return "proxmop";
    case BoundKind::kRemoteness: return "rho";
    case BoundKind::kRadius: return "rad";
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(const std::string& name) {
  if (name == "prox2c") return BoundKind::kProximity2Connected;
  if (name == "proxmop") return BoundKind::kProximityMaximal;
  if (name == "rho") return BoundKind::kRemoteness;
  if (name == "rad") return BoundKind::kRadius;
  return std::nullopt;
}

}  // namespace opg
