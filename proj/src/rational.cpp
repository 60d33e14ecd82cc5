#include "opgraph/rational.hpp"

#include <ostream>

namespace opg {

std::string Rational::decimal(int places) const {
  // Round half away from zero at the requested precision, using integers only.
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  __int128 scaled = __int128(num_) * scale;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  __int128 q = scaled / den_;
  if ((scaled % den_) * 2 >= den_) ++q;
  __int128 whole = q / scale;
  __int128 frac = q % scale;

  std::string out = negative && q != 0 ? "-" : "";
  out += std::to_string(static_cast<long long>(whole));
  if (places > 0) {
    std::string digits = std::to_string(static_cast<long long>(frac));
    out += '.';
    out.append(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace opg
