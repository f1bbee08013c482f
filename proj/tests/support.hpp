#pragma once

#include <string_view>
#include <vector>

#include "footsort/sock_ordering.hpp"
#include "footsort/text_format.hpp"

namespace footsort::test {

inline SockOrdering S(std::string_view letters) { return parse_ordering(letters).ordering; }

inline TotalOrderCertificate order_of(std::string_view letters) {
  TotalOrderCertificate o;
  for (char ch : letters) o.ascending.push_back(static_cast<Color>(ch - 'a'));
  return o;
}

inline std::vector<Color> colors_of(const SockOrdering& s) { return {s.colors().begin(), s.colors().end()}; }

}  // namespace footsort::test
