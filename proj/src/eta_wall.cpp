#include "wt/eta_wall.hpp"

#include <cctype>
#include <charconv>

#include "wt/error.hpp"

namespace wt {

LaurentPoly mu(const std::vector<CrossingChange>& changes) {
  LaurentPoly total;
  for (const auto& change : changes) total += LaurentPoly::monomial(change.sign, change.linking);
  return total;
}

LaurentPoly lambda(const std::vector<CrossingChange>& changes) {
  LaurentPoly total;
  for (const auto& change : changes) total += LaurentPoly::constant(change.sign) * symmetric_power(change.linking);
  return total;
}

LaurentPoly eta(const std::vector<CrossingChange>& changes) {
  std::int64_t sign_sum = 0;
  for (const auto& change : changes) sign_sum += change.sign;
  if (sign_sum != 0) {
    throw DomainError("not a null-homotopy: lambda(1) != 0 (crossing signs sum to " + std::to_string(sign_sum) + ")");
  }
  return lambda(changes);
}

XPoly beta_series(const std::vector<CrossingChange>& changes) { return to_x_poly(eta(changes)); }

std::vector<CrossingChange> example_Lk(std::int64_t k) {
  return {{-1, k}, {+1, k + 1}, {+1, k + 1}, {-1, k + 2}};
}

std::vector<CrossingChange> parse_crossings(std::string_view text) {
  std::vector<CrossingChange> changes;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip();
    if (i == line.size()) continue;
    auto fail = [&](const std::string& what) -> void {
      throw ParseError("line " + std::to_string(line_no) + ": " + what, i, line_no);
    };
    if (line[i] != '+' && line[i] != '-') fail("expected '+' or '-' followed by a linking number");
    int sign = line[i] == '+' ? 1 : -1;
    ++i;
    skip();
    std::size_t number_start = i;
    if (i < line.size() && line[i] == '-') ++i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    std::int64_t linking = 0;
    auto [ptr, ec] = std::from_chars(line.data() + number_start, line.data() + i, linking);
    if (ec != std::errc() || ptr != line.data() + i) fail("bad linking number");
    skip();
    if (i != line.size()) fail("trailing characters");
    changes.push_back({sign, linking});
  }
  return changes;
}

}  // namespace wt
