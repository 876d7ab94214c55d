#include "wt/clasper.hpp"

#include <algorithm>

#include "wt/error.hpp"

namespace wt {

std::string to_string(EffectClass kind) {
  switch (kind) {
    case EffectClass::TInf: return "t_inf";
    case EffectClass::Tn: return "t_n";
    case EffectClass::FramedManyTwos: return "framed_many_twos";
    case EffectClass::TwistedTwoTwos: return "twisted_two_twos";
    case EffectClass::TwistedOneTwo: return "twisted_one_two";
    case EffectClass::FramedTwoTwos: return "framed_two_twos";
    case EffectClass::LinkingChanger: return "linking_changer";
    case EffectClass::BetaBadOther: return "beta_bad_other";
  }
  return "unknown";
}

std::string describe(const Classification& c) {
  switch (c.kind) {
    case EffectClass::TInf: return "t_" + std::to_string(c.index) + "^inf";
    case EffectClass::Tn: return "t_" + std::to_string(c.index);
    case EffectClass::FramedManyTwos: return "framed, >= 3 2-labels";
    case EffectClass::TwistedTwoTwos: return "twisted, >= 2 2-labels";
    case EffectClass::TwistedOneTwo: return "twisted, one 2-label";
    case EffectClass::FramedTwoTwos: return "framed, two 2-labels and " + std::to_string(c.index) + " 1-labels";
    case EffectClass::LinkingChanger: return "linking number changer <1,2>";
    case EffectClass::BetaBadOther: return "beta-bad";
  }
  return "unknown";
}

Classification classify(const ClasperSurgery& surgery) {
  const Label two(2);
  if (const auto* twisted = std::get_if<TwistedEntry>(&surgery)) {
    require_two_component(twisted->tree);
    if (auto i = t_inf_index(twisted->tree)) return {EffectClass::TInf, *i};
    int twos = twisted->tree.label_count(two);
    if (twos == 0) return {EffectClass::BetaBadOther, 0};
    if (twos == 1) return {EffectClass::TwistedOneTwo, 0};
    return {EffectClass::TwistedTwoTwos, 0};
  }
  const auto& framed = std::get<FramedEntry>(surgery);
  require_two_component(framed.tree);
  int twos = framed.tree.label_count(two);
  int ones = framed.tree.label_count(Label(1));
  if (framed.tree.order() == 0 && twos == 1) return {EffectClass::LinkingChanger, 0};
  if (auto n = t_index(framed.tree)) return {EffectClass::Tn, *n};
  if (twos >= 3) return {EffectClass::FramedManyTwos, 0};
  // <2,2> has no 1-labels and no t_0 to be confused with; it is not beta-bad.
  if (twos == 2) return {EffectClass::FramedTwoTwos, ones};
  return {EffectClass::BetaBadOther, 0};
}

namespace {

void clamp_indeterminacy(EffectReport& report, int max_order) {
  if (!report.indeterminate_from) return;
  int from = std::min(*report.indeterminate_from, max_order + 1);
  report.indeterminate_from = from;
  std::erase_if(report.delta, [from](const auto& kv) { return kv.first >= from; });
}

}  // namespace

EffectReport effect(const ClasperSurgery& surgery, int max_order, const Conventions& conventions) {
  if (max_order < 1) throw DomainError("max order must be >= 1");
  const Classification c = classify(surgery);
  EffectReport report;
  switch (c.kind) {
    case EffectClass::LinkingChanger:
      report.undefined = true;
      return report;
    case EffectClass::TInf: {
      std::int64_t omega = std::get<TwistedEntry>(surgery).omega;
      if (c.index <= max_order && omega != 0) report.delta[c.index] = omega;
      return report;
    }
    case EffectClass::FramedManyTwos:
    case EffectClass::TwistedTwoTwos:
    case EffectClass::TwistedOneTwo:
    case EffectClass::FramedTwoTwos:
      return report;
    case EffectClass::Tn: {
      const int n = c.index;
      const int j = (n + 1) / 2;
      const std::int64_t weight =
          (n % 2 == 0 ? 2 : 1) * std::get<FramedEntry>(surgery).sign * conventions.t_tree_sign;
      if (j <= max_order) report.delta[j] = weight;
      report.indeterminate_from = j + 1;
      break;
    }
    case EffectClass::BetaBadOther: {
      // High enough to leave a Cochran tower of order 2k intact: nothing up
      // to k moves. Anything lower can create t_i^inf trees of every index.
      const int d = entry_order(surgery);
      const bool high = std::holds_alternative<FramedEntry>(surgery) ? d > 2 * max_order : d > max_order;
      report.indeterminate_from = high ? max_order + 1 : 1;
      break;
    }
  }
  clamp_indeterminacy(report, max_order);
  return report;
}

EffectReport aggregate(std::span<const ClasperSurgery> sequence, int max_order, const Conventions& conventions) {
  if (max_order < 1) throw DomainError("max order must be >= 1");
  EffectReport total;
  for (const auto& surgery : sequence) {
    EffectReport one = effect(surgery, max_order, conventions);
    total.undefined = total.undefined || one.undefined;
    for (const auto& [i, d] : one.delta) total.delta[i] += d;
    if (one.indeterminate_from) {
      total.indeterminate_from =
          total.indeterminate_from ? std::min(*total.indeterminate_from, *one.indeterminate_from) : *one.indeterminate_from;
    }
  }
  std::erase_if(total.delta, [](const auto& kv) { return kv.second == 0; });
  if (total.undefined) {
    total.delta.clear();
    total.indeterminate_from.reset();
    return total;
  }
  clamp_indeterminacy(total, max_order);
  return total;
}

}  // namespace wt
