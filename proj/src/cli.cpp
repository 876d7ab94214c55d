#include "wt/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wt/clasper.hpp"
#include "wt/error.hpp"
#include "wt/eta_wall.hpp"
#include "wt/forest.hpp"
#include "wt/ihx.hpp"
#include "wt/normalize.hpp"

namespace wt::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Errors raised while handling one input name the input.
template <class F>
auto for_input(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.position(), e.line());
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

Json order_json(OrderBound b) {
  if (b.is_infinite()) return "inf";
  if (b == OrderBound::none()) return nullptr;
  return b.value();
}

Json entry_json(const ForestEntry& entry) {
  Json j;
  if (const auto* f = std::get_if<FramedEntry>(&entry)) {
    j["kind"] = "framed";
    j["sign"] = f->sign;
    j["tree"] = render(f->tree);
  } else {
    const auto& t = std::get<TwistedEntry>(entry);
    j["kind"] = "twisted";
    j["omega"] = t.omega;
    j["tree"] = render(t.tree);
  }
  return j;
}

Json entries_json(const std::vector<ForestEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries) arr.push_back(entry_json(e));
  return arr;
}

Json as_json(const IntersectionForest& forest) {
  return Json{{"frontier", order_json(forest.frontier())}, {"entries", entries_json(forest.entries())}};
}

Json report_json(const EffectReport& report) {
  Json delta = Json::object();
  for (const auto& [i, d] : report.delta) delta[std::to_string(i)] = d;
  Json j;
  j["undefined"] = report.undefined;
  j["delta"] = std::move(delta);
  j["indeterminate_from"] = report.indeterminate_from ? Json(*report.indeterminate_from) : Json(nullptr);
  return j;
}

// One JSON document for a single input, an array for a batch.
void emit_json(std::ostream& out, const std::vector<Json>& items) {
  if (items.size() == 1) {
    out << items.front().dump(2) << '\n';
  } else {
    out << Json(items).dump(2) << '\n';
  }
}

std::string family_name(const AnyTree& tree) {
  if (const auto* f = std::get_if<FramedTree>(&tree)) {
    if (auto n = t_index(*f)) return "t_" + std::to_string(*n);
  } else if (const auto* t = std::get_if<TwistedTree>(&tree)) {
    if (auto i = t_inf_index(*t)) return "t_" + std::to_string(*i) + "^inf";
  }
  return {};
}

std::string render_key(const AnyTree& tree) {
  return std::visit([](const auto& t) { return canonical(t).text(); }, tree);
}

bool tree_is_beta_bad(const AnyTree& tree) {
  if (const auto* f = std::get_if<FramedTree>(&tree)) return is_beta_bad(*f);
  if (const auto* t = std::get_if<TwistedTree>(&tree)) return is_beta_bad(*t);
  throw DomainError("beta-badness is defined for framed and twisted trees, not rooted trees");
}

// "beta^1 = 1; beta^i = 0 for i >= 2" and friends.
std::string beta_line(const std::vector<std::int64_t>& values, bool open_ended, OrderBound achieved) {
  std::size_t last = values.size();
  while (last > 0 && values[last - 1] == 0) --last;
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < last; ++i) parts.push_back("beta^" + std::to_string(i + 1) + " = " + std::to_string(values[i]));
  const std::size_t a = last + 1;
  const std::size_t d = values.size();
  if (open_ended) {
    parts.push_back("beta^i = 0 for i >= " + std::to_string(a));
  } else if (a == d) {
    parts.push_back("beta^" + std::to_string(a) + " = 0");
  } else if (a < d) {
    parts.push_back("beta^i = 0 for " + std::to_string(a) + " <= i <= " + std::to_string(d));
  }
  std::string line;
  for (std::size_t i = 0; i < parts.size(); ++i) line += (i ? "; " : "") + parts[i];
  if (!achieved.is_infinite()) {
    line += " (cochran order " + achieved.to_string() + ", defined for i <= " + std::to_string(d) + ")";
  }
  return line;
}

Json move_json(const Move& move) {
  Json j;
  j["rule"] = move.rule;
  j["consumed"] = entries_json(move.consumed);
  j["produced"] = entries_json(move.produced);
  j["frontier"] = move.frontier ? order_json(*move.frontier) : Json(nullptr);
  return j;
}

TreeVector parse_expression(std::string_view text) {
  TreeVector v;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto star = line.find('*');
    if (star == std::string::npos) throw ParseError("expected 'INT * <framed>'", 0, number);
    std::string coefficient = line.substr(0, star);
    coefficient.erase(0, coefficient.find_first_not_of(" \t"));
    coefficient.erase(coefficient.find_last_not_of(" \t") + 1);
    BigInt c;
    try {
      c = BigInt(coefficient);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + coefficient + "'", 0, number);
    }
    FramedTree tree = [&] {
      try {
        return parse_framed(line.substr(star + 1));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), star + 1 + e.position(), number);
      }
    }();
    v.add(tree, c);
  }
  return v;
}

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> labels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      labels.push_back(value);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--labels", "expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return labels;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Whitney towers, Cochran invariants and the eta-function", "wt"};
  app.require_subcommand(1);

  // tree
  auto* tree = app.add_subcommand("tree", "single-tree queries");
  tree->require_subcommand(1);
  std::vector<std::string> tree_inputs;
  bool tree_json = false;
  for (const char* name : {"order", "canon", "bad"}) {
    auto* sub = tree->add_subcommand(name);
    sub->add_option("TREE", tree_inputs, "tree spelling, e.g. \"<(2,1),(1,2)>\"")->required();
    sub->add_flag("--json", tree_json);
  }
  tree->get_subcommand("order")->description("number of trivalent vertices");
  tree->get_subcommand("canon")->description("canonical spelling");
  tree->get_subcommand("bad")->description("beta-badness, naming t_n and t_i^inf");

  // forest
  auto* forest = app.add_subcommand("forest", "intersection forests");
  forest->require_subcommand(1);
  std::vector<std::string> forest_files;
  bool forest_json = false;
  std::optional<int> beta_max;
  int target = 2;
  bool assume_eliminable = false;
  std::string log_path;
  bool flip_t_sign = false;
  int ihx_bound = kDefaultIhxBound;
  for (const char* name : {"order", "cochran", "beta", "normalize"}) {
    auto* sub = forest->add_subcommand(name);
    sub->add_option("FILE", forest_files, "forest file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", forest_json);
  }
  forest->get_subcommand("order")->description("twisted Whitney tower order");
  forest->get_subcommand("cochran")->description("Cochran tower order");
  auto* beta_cmd = forest->get_subcommand("beta");
  beta_cmd->description("Cochran invariants beta^i");
  beta_cmd->add_option("--max", beta_max, "report beta^i for i <= MAX")->check(CLI::PositiveNumber);
  auto* normalize_cmd = forest->get_subcommand("normalize");
  normalize_cmd->description("raise to a Cochran tower of order TARGET");
  normalize_cmd->add_option("--target", target, "even Cochran order to reach")->capture_default_str();
  normalize_cmd->add_flag("--assume-eliminable", assume_eliminable, "drop beta-bad trees no rule removes");
  normalize_cmd->add_option("--log", log_path, "write the move log as JSON");
  normalize_cmd->add_flag("--flip-t-sign", flip_t_sign, "opposite orientation convention for t_n");
  normalize_cmd->add_option("--ihx-bound", ihx_bound, "largest order searched for IHX cancellation")
      ->capture_default_str();

  // eta
  auto* eta_cmd = app.add_subcommand("eta", "Kojima eta-function from crossing changes");
  std::vector<std::string> crossing_files;
  bool x_series = false;
  bool eta_json = false;
  eta_cmd->add_option("--crossings", crossing_files, "crossing-change file")
      ->required()
      ->check(CLI::ExistingFile);
  eta_cmd->add_flag("--x-series", x_series, "print the beta-series in x = (1-t)(1-t^-1)");
  eta_cmd->add_flag("--json", eta_json);

  // clasper
  auto* clasper = app.add_subcommand("clasper", "clasper surgery effects");
  clasper->require_subcommand(1);
  auto* effects_cmd = clasper->add_subcommand("effects", "effect of a surgery sequence on beta^i (JSON)");
  std::vector<std::string> surgery_files;
  int clasper_max = 4;
  bool clasper_flip = false;
  effects_cmd->add_option("FILE", surgery_files, "forest-grammar surgery list")->required()->check(CLI::ExistingFile);
  effects_cmd->add_option("--max", clasper_max, "largest i reported")->check(CLI::PositiveNumber)->capture_default_str();
  effects_cmd->add_flag("--flip-t-sign", clasper_flip, "opposite orientation convention for t_n");
  effects_cmd->add_flag("--json", "accepted for symmetry; the report is always JSON");

  // ihx
  auto* ihx = app.add_subcommand("ihx", "framed trees modulo IHX and antisymmetry");
  ihx->require_subcommand(1);
  auto* reduce_cmd = ihx->add_subcommand("reduce", "canonical residue of an integer combination");
  int ihx_order = 0;
  std::string labels_text;
  std::vector<std::string> expr_files;
  bool ihx_json = false;
  reduce_cmd->add_option("--order", ihx_order, "tree order")->required()->check(CLI::NonNegativeNumber);
  reduce_cmd->add_option("--labels", labels_text, "leaf labels, e.g. 1,1,2,2")->required();
  reduce_cmd->add_option("EXPR-FILE", expr_files, "lines 'INT * <framed>'")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_flag("--json", ihx_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "wt: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "run 'wt " << sub->get_name() << " --help' for usage\n";
    } else {
      err << "run 'wt --help' for usage\n";
    }
    return kUsageError;
  }

  try {
    if (tree->parsed()) {
      std::vector<Json> items;
      for (const auto& text : tree_inputs) {
        AnyTree parsed = parse_tree(text);
        Json j{{"input", text}};
        std::string line;
        if (tree->get_subcommand("order")->parsed()) {
          j["order"] = order(parsed);
          line = std::to_string(order(parsed));
        } else if (tree->get_subcommand("canon")->parsed()) {
          j["canonical"] = render_key(parsed);
          line = render_key(parsed);
        } else {
          bool bad = tree_is_beta_bad(parsed);
          std::string family = family_name(parsed);
          j["beta_bad"] = bad;
          j["family"] = family.empty() ? Json(nullptr) : Json(family);
          line = bad ? "beta-bad" : "not beta-bad";
          if (!family.empty()) line += " (" + family + ")";
        }
        if (tree_json) {
          items.push_back(std::move(j));
        } else {
          out << line << '\n';
        }
      }
      if (tree_json) emit_json(out, items);
      return kOk;
    }

    if (forest->parsed()) {
      std::vector<Json> items;
      MoveLog all_moves;
      std::vector<Json> logs;
      for (const auto& path : forest_files) {
        IntersectionForest f = for_input(path, [&] { return parse_forest(read_file(path)); });
        Json j{{"file", path}};
        std::string text;
        if (forest->get_subcommand("order")->parsed()) {
          OrderBound b = tower_order(f);
          j["tower_order"] = order_json(b);
          text = "tower order = " + b.to_string() + "\n";
        } else if (forest->get_subcommand("cochran")->parsed()) {
          OrderBound b = cochran_order(f);
          j["cochran_order"] = order_json(b);
          text = "cochran order = " + b.to_string() + "\n";
        } else if (beta_cmd->parsed()) {
          OrderBound achieved = cochran_order(f);
          if (achieved.is_infinite() || achieved.value() >= 2) {
            std::optional<int> depth = beta_max;
            bool open_ended = false;
            if (achieved.is_infinite() && !depth) {
              // Exhaustive forest: every beta^i past the last listed t_i^inf is 0.
              int last = 1;
              for (const auto& e : f.entries()) {
                if (const auto* t = std::get_if<TwistedEntry>(&e)) {
                  if (auto i = t_inf_index(t->tree)) last = std::max(last, *i);
                }
              }
              depth = last;
              open_ended = true;
            }
            auto values = beta_vector(f, depth);
            j["cochran_order"] = order_json(achieved);
            j["beta"] = values;
            j["exhaustive"] = open_ended;
            text = beta_line(values, open_ended, achieved) + "\n";
          } else {
            throw DomainError(path + ": " + BetaUndefinedError(1, achieved).what());
          }
        } else {
          NormalizeOptions options;
          options.target = target;
          options.assume_eliminable = assume_eliminable;
          options.ihx_bound = ihx_bound;
          options.conventions.t_tree_sign = flip_t_sign ? -1 : 1;
          Rewrite r = for_input(path, [&] { return normalize(f, options); });
          Json log = Json::array();
          for (const auto& m : r.log) log.push_back(move_json(m));
          logs.push_back(Json{{"file", path}, {"moves", log}});
          j["forest"] = as_json(r.forest);
          j["moves"] = r.log.size();
          text = render(r.forest);
        }
        if (forest_json) {
          items.push_back(std::move(j));
        } else {
          if (forest_files.size() > 1) out << "# " << path << '\n';
          out << text;
        }
      }
      if (normalize_cmd->parsed() && !log_path.empty()) {
        std::ofstream log_out(log_path);
        if (!log_out) throw DomainError("cannot write " + log_path);
        log_out << (logs.size() == 1 ? logs.front() : Json(logs)).dump(2) << '\n';
      }
      if (forest_json) emit_json(out, items);
      return kOk;
    }

    if (eta_cmd->parsed()) {
      std::vector<Json> items;
      for (const auto& path : crossing_files) {
        auto changes = for_input(path, [&] { return parse_crossings(read_file(path)); });
        LaurentPoly e = for_input(path, [&] { return eta(changes); });
        XPoly series = to_x_poly(e);
        if (eta_json) {
          Json beta = Json::array();
          for (const auto& c : series.coefficients()) beta.push_back(c.str());
          items.push_back(Json{{"file", path},
                               {"mu", render(mu(changes))},
                               {"eta", render(e)},
                               {"x_series", render(series)},
                               {"beta", beta}});
        } else {
          if (crossing_files.size() > 1) out << "# " << path << '\n';
          out << (x_series ? render(series) : render(e)) << '\n';
        }
      }
      if (eta_json) emit_json(out, items);
      return kOk;
    }

    if (clasper->parsed()) {
      Conventions conventions{clasper_flip ? -1 : 1};
      std::vector<Json> items;
      for (const auto& path : surgery_files) {
        IntersectionForest f = for_input(path, [&] { return parse_forest(read_file(path)); });
        Json surgeries = Json::array();
        for (const auto& s : f.entries()) {
          Json one{{"surgery", render(s)}, {"class", describe(classify(s))}};
          one.update(report_json(effect(s, clasper_max, conventions)));
          surgeries.push_back(std::move(one));
        }
        Json j{{"file", path}, {"max_order", clasper_max}};
        j.update(report_json(aggregate(f.entries(), clasper_max, conventions)));
        j["surgeries"] = std::move(surgeries);
        items.push_back(std::move(j));
      }
      emit_json(out, items);
      return kOk;
    }

    if (ihx->parsed()) {
      std::vector<int> labels = parse_labels(labels_text);
      const RelationLattice& lattice = lattice_for(ihx_order, labels);
      std::vector<Json> items;
      for (const auto& path : expr_files) {
        TreeVector v = for_input(path, [&] { return parse_expression(read_file(path)); });
        TreeVector residue = for_input(path, [&] { return lattice.reduce(v); });
        if (ihx_json) {
          Json terms = Json::array();
          for (const auto& [key, c] : residue.terms()) terms.push_back(Json{{"coefficient", c.str()}, {"tree", key.text()}});
          items.push_back(Json{{"file", path}, {"zero", residue.is_zero()}, {"residue", terms}});
        } else {
          if (expr_files.size() > 1) out << "# " << path << '\n';
          std::string text = render(residue);
          out << text << (text.ends_with('\n') ? "" : "\n");
        }
      }
      if (ihx_json) emit_json(out, items);
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "wt: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "wt: parse error: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "wt: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace wt::cli
