#include "wt/forest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "wt/error.hpp"

namespace wt {

std::string OrderBound::to_string() const {
  if (infinite_) return "inf";
  if (value_ < 0) return "none";
  return std::to_string(value_);
}

ForestEntry make_framed_entry(const FramedTree& tree, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("framed entry sign must be +1 or -1");
  return FramedEntry{canonical_form(tree), sign};
}

ForestEntry make_twisted_entry(const TwistedTree& tree, std::int64_t omega) {
  if (omega == 0) throw DomainError("a twisted entry needs nonzero omega (omega = 0 is a framed Whitney disk)");
  return TwistedEntry{canonical_form(tree), omega};
}

int entry_order(const ForestEntry& entry) {
  return std::visit([](const auto& e) { return e.tree.order(); }, entry);
}

bool is_beta_bad(const ForestEntry& entry) {
  return std::visit([](const auto& e) { return is_beta_bad(e.tree); }, entry);
}

std::string render(const ForestEntry& entry) {
  if (const auto* framed = std::get_if<FramedEntry>(&entry)) {
    return std::string(framed->sign > 0 ? "+ " : "- ") + render(framed->tree);
  }
  const auto& twisted = std::get<TwistedEntry>(entry);
  return "w=" + std::to_string(twisted.omega) + " " + render(twisted.tree);
}

std::strong_ordering compare(const ForestEntry& a, const ForestEntry& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (const auto* fa = std::get_if<FramedEntry>(&a)) {
    const auto& fb = std::get<FramedEntry>(b);
    if (auto c = fa->tree.order() <=> fb.tree.order(); c != 0) return c;
    if (auto c = compare(fa->tree.first(), fb.tree.first()); c != 0) return c;
    if (auto c = compare(fa->tree.second(), fb.tree.second()); c != 0) return c;
    return fb.sign <=> fa->sign;  // + before -
  }
  const auto& ta = std::get<TwistedEntry>(a);
  const auto& tb = std::get<TwistedEntry>(b);
  if (auto c = ta.tree.order() <=> tb.tree.order(); c != 0) return c;
  if (auto c = compare(ta.tree.body(), tb.tree.body()); c != 0) return c;
  return ta.omega <=> tb.omega;
}

IntersectionForest::IntersectionForest(std::vector<ForestEntry> entries, OrderBound frontier)
    : entries_(std::move(entries)), frontier_(frontier) {
  if (!frontier_.is_infinite() && frontier_.value() <= 0) {
    throw DomainError("frontier must be a positive integer or inf");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const ForestEntry& a, const ForestEntry& b) { return compare(a, b) < 0; });
}

IntersectionForest IntersectionForest::with_frontier(OrderBound frontier) const {
  return IntersectionForest(entries_, frontier);
}

IntersectionForest IntersectionForest::with_entries(std::vector<ForestEntry> entries) const {
  return IntersectionForest(std::move(entries), frontier_);
}

// ---------------------------------------------------------------------------
// File format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what, 0, line);
}

std::int64_t parse_int(std::string_view text, std::size_t line, const char* what) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) fail_line(line, std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

template <typename T, typename Parse>
T parse_tree_on_line(std::string_view text, std::size_t line, Parse parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    fail_line(line, e.what());
  }
}

}  // namespace

IntersectionForest parse_forest(std::string_view text) {
  std::vector<ForestEntry> entries;
  OrderBound frontier = OrderBound::infinite();
  bool seen_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.substr(0, 8) == "frontier") {
      if (seen_header || !entries.empty()) fail_line(line_no, "the frontier header must come first and appear once");
      seen_header = true;
      std::string_view value = trim(line.substr(8));
      if (value == "inf") continue;
      std::int64_t g = parse_int(value, line_no, "frontier");
      if (g <= 0) fail_line(line_no, "frontier must be positive, got " + std::to_string(g));
      frontier = OrderBound(g);
      continue;
    }

    try {
      if (line.front() == '+' || line.front() == '-') {
        int sign = line.front() == '+' ? 1 : -1;
        FramedTree tree = parse_tree_on_line<FramedTree>(trim(line.substr(1)), line_no, parse_framed);
        entries.push_back(make_framed_entry(tree, sign));
      } else if (line.substr(0, 2) == "w=") {
        std::string_view rest = line.substr(2);
        std::size_t space = 0;
        while (space < rest.size() && !std::isspace(static_cast<unsigned char>(rest[space]))) ++space;
        std::int64_t omega = parse_int(rest.substr(0, space), line_no, "omega");
        if (omega == 0) fail_line(line_no, "omega = 0 is a framed Whitney disk, not a twisted entry");
        TwistedTree tree = parse_tree_on_line<TwistedTree>(trim(rest.substr(space)), line_no, parse_twisted);
        entries.push_back(make_twisted_entry(tree, omega));
      } else {
        fail_line(line_no, "expected '+ <framed>', '- <framed>' or 'w=INT <twisted>'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_line(line_no, e.what());
    }
  }
  return IntersectionForest(std::move(entries), frontier);
}

std::string render(const IntersectionForest& forest) {
  std::ostringstream out;
  out << "frontier " << forest.frontier().to_string() << '\n';
  for (const auto& entry : forest.entries()) out << render(entry) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Orders

OrderBound tower_order(const IntersectionForest& forest) {
  std::optional<std::int64_t> bound;
  auto tighten = [&](std::int64_t n) { bound = bound ? std::min(*bound, n) : n; };
  for (const auto& entry : forest.entries()) {
    if (std::holds_alternative<FramedEntry>(entry)) {
      tighten(entry_order(entry));
    } else {
      tighten(2 * static_cast<std::int64_t>(entry_order(entry)));
    }
  }
  if (!forest.frontier().is_infinite()) tighten(forest.frontier().value() + 1);
  return bound ? OrderBound(*bound) : OrderBound::infinite();
}

OrderBound cochran_order(const IntersectionForest& forest) {
  std::optional<std::int64_t> bound;
  auto tighten = [&](std::int64_t n) { bound = bound ? std::min(*bound, n) : n; };
  for (const auto& entry : forest.entries()) {
    if (!is_beta_bad(entry)) continue;
    std::int64_t d = entry_order(entry);
    tighten(std::holds_alternative<FramedEntry>(entry) ? d - 1 : 2 * d - 1);
  }
  if (!forest.frontier().is_infinite()) tighten(forest.frontier().value());
  if (!bound) return OrderBound::infinite();
  return *bound < 0 ? OrderBound::none() : OrderBound(*bound);
}

BetaUndefinedError::BetaUndefinedError(int index, OrderBound achieved)
    : DomainError("beta^" + std::to_string(index) + " needs a Cochran tower of order " + std::to_string(2 * index) +
                  ", but the forest has Cochran order " + achieved.to_string()),
      index_(index),
      achieved_(achieved) {}

namespace {

std::int64_t sum_t_inf(const IntersectionForest& forest, int i) {
  CanonicalKey target = canonical(make_t_inf(i));
  std::int64_t total = 0;
  for (const auto& entry : forest.entries()) {
    const auto* twisted = std::get_if<TwistedEntry>(&entry);
    if (twisted && twisted->tree.order() == i && canonical(twisted->tree) == target) total += twisted->omega;
  }
  return total;
}

}  // namespace

std::int64_t beta(const IntersectionForest& forest, int i) {
  if (i < 1) throw DomainError("beta^i is defined for i >= 1");
  OrderBound achieved = cochran_order(forest);
  if (achieved < OrderBound(2 * static_cast<std::int64_t>(i))) throw BetaUndefinedError(i, achieved);
  return sum_t_inf(forest, i);
}

std::vector<std::int64_t> beta_vector(const IntersectionForest& forest, std::optional<int> depth) {
  OrderBound achieved = cochran_order(forest);
  std::int64_t count = 0;
  if (achieved.is_infinite()) {
    if (!depth) throw DomainError("the forest is a Cochran tower of infinite order; give an explicit depth");
    count = *depth;
  } else {
    count = std::max<std::int64_t>(0, achieved.value() / 2);
    if (depth) count = std::min<std::int64_t>(count, *depth);
  }
  std::vector<std::int64_t> values;
  for (int i = 1; i <= count; ++i) values.push_back(sum_t_inf(forest, i));
  return values;
}

std::int64_t linking_number(const IntersectionForest& forest) {
  CanonicalKey edge = canonical(parse_framed("<1,2>"));
  std::int64_t total = 0;
  for (const auto& entry : forest.entries()) {
    const auto* framed = std::get_if<FramedEntry>(&entry);
    if (framed && framed->tree.order() == 0 && canonical(framed->tree) == edge) total += framed->sign;
  }
  return total;
}

int arf_parity(const IntersectionForest& forest) {
  CanonicalKey y_tree = canonical(parse_framed("<1,(1,1)>"));
  CanonicalKey twisted_11 = canonical(parse_twisted("(1,1)^inf"));
  std::int64_t total = 0;
  for (const auto& entry : forest.entries()) {
    if (const auto* framed = std::get_if<FramedEntry>(&entry)) {
      if (framed->tree.order() == 1 && canonical(framed->tree) == y_tree) total += framed->sign;
    } else {
      const auto& twisted = std::get<TwistedEntry>(entry);
      if (twisted.tree.order() == 1 && canonical(twisted.tree) == twisted_11) total += twisted.omega;
    }
  }
  return static_cast<int>(((total % 2) + 2) % 2);
}

IntersectionForest infmany_forest(int k) {
  if (k < 1) throw DomainError("infmany_forest needs k >= 1");
  std::vector<ForestEntry> entries;
  for (int i = 1; i <= 2 * k + 1; ++i) entries.push_back(make_twisted_entry(make_t_inf(i), 1));
  // Linear tree: the 2-label at one end, 2k+2 1-labels.
  RootedTree body = RootedTree::leaf(Label(2));
  for (int i = 0; i < 2 * k + 1; ++i) body = RootedTree::join(std::move(body), RootedTree::leaf(Label(1)));
  FramedTree top(body, RootedTree::leaf(Label(1)));
  entries.push_back(make_framed_entry(top, 1));
  entries.push_back(make_framed_entry(top, -1));
  return IntersectionForest(std::move(entries));
}

}  // namespace wt
