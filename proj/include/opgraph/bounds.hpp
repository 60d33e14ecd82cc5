#pragma once

#include <optional>
#include <string>

#include "opgraph/rational.hpp"

namespace opg {

enum class BoundKind {
  kProximity2Connected,  // prox2c
  kProximityMaximal,     // proxmop
  kRemoteness,           // rho
  kRadius,               // rad
};

struct BoundValue {
  Rational value;
  BoundKind source = BoundKind::kProximity2Connected;
  int n = 0;
  std::optional<int> q;
};

/// (n+5)/8 + (q^2 - 4q + 9) / (8(n-1)) for 2-connected outerplanar graphs
/// whose interior faces have length at most q. Requires n >= 3, 3 <= q <= n.
Rational prox_bound_2conn(int n, int q);

/// (n+5)/8 + 3/(4(n-1)) for maximal outerplanar graphs. Requires n >= 3.
Rational prox_bound_mop(int n);

/// Remoteness of C_n: (n+1)/4, plus 1/(4(n-1)) when n is even. Requires n >= 3.
Rational remoteness_bound(int n);

/// floor(n/4) + 1. Requires n >= 3.
int radius_bound(int n);

/// Radii r with 2r - 2 <= diam <= 2r, i.e. [ceil(diam/2), floor((diam+2)/2)].
struct RadiusInterval {
  int lo = 0;
  int hi = 0;
  bool contains(int r) const noexcept { return lo <= r && r <= hi; }
};
RadiusInterval chordal_radius_interval(int diameter);

BoundValue evaluate_bound(BoundKind kind, int n, std::optional<int> q = std::nullopt);

std::string to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(const std::string& name);

}  // namespace opg
