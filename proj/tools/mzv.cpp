#include "mzv/closedform.hpp"
#include "mzv/renorm.hpp"
#include "mzv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultWordCap = 14;

mzv::Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty() || piece.size() > 6 || piece.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("composition", "expected comma-separated non-negative integers, got '" + text + "'");
    parts.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return mzv::Composition(parts);
}

double approx(const mzv::Rational& r) { return r.convert_to<double>(); }

struct ValueRow {
  explicit ValueRow(mzv::Composition k) : ks(std::move(k)) {}
  mzv::Composition ks;
  std::string kind;
  std::vector<std::pair<std::string, mzv::Rational>> values;  // pipeline -> value
  bool agreed = true;
};

void print_rows(const std::vector<ValueRow>& rows, const std::string& format, bool decimal) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json rec;
      rec["ks"] = row.ks.parts;
      rec["value_" + row.kind] = mzv::to_string(row.values.front().second);
      if (decimal) rec["value_approx"] = approx(row.values.front().second);
      rec["pipelines_agreed"] = row.agreed;
      arr.push_back(std::move(rec));
    }
    std::cout << arr.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << (decimal ? "k;value;approx\n" : "k;value\n");
    for (const auto& row : rows) {
      std::cout << row.ks.display() << ";" << mzv::to_string(row.values.front().second);
      if (decimal) std::cout << ";" << approx(row.values.front().second);
      std::cout << "\n";
    }
    return;
  }
  for (const auto& row : rows) {
    std::cout << row.kind << "(" << row.ks.display() << ")";
    if (row.values.size() == 1) {
      std::cout << " = " << mzv::to_string(row.values.front().second);
      if (decimal) std::cout << "  (approx " << approx(row.values.front().second) << ")";
      std::cout << "\n";
    } else {
      std::cout << "\n";
      for (const auto& [name, v] : row.values) {
        std::cout << "  " << name << " = " << mzv::to_string(v);
        if (decimal) std::cout << "  (approx " << approx(v) << ")";
        std::cout << "\n";
      }
      std::cout << "  agreed: " << (row.agreed ? "true" : "false") << "\n";
    }
  }
}

int run_value(const std::string& kind, const std::string& ks_text, const std::string& pipeline,
              const std::string& format, int weight_cap, int margin, bool decimal) {
  mzv::Composition ks = parse_composition(ks_text);
  const bool wants_character = pipeline == "birkhoff" || pipeline == "lemma" || pipeline == "all";
  if (kind == "fkmt" && (pipeline == "birkhoff" || pipeline == "lemma")) {
    std::cerr << "error: the " << pipeline << " pipeline applies only to ems values\n";
    return kExitUsage;
  }
  if (wants_character && kind == "ems" && ks.word_weight() > weight_cap) {
    std::cerr << "error: word weight " << ks.word_weight() << " exceeds the cap " << weight_cap
              << " for character pipelines (raise it with --max-weight)\n";
    return kExitUsage;
  }
  if (weight_cap > kDefaultWordCap && wants_character && kind == "ems")
    std::cerr << "warning: cap raised above " << kDefaultWordCap
              << "; the subset enumeration is exponential in the word weight\n";

  ValueRow row(ks);
  row.kind = kind;
  auto character_value = [&](bool lemma) {
    mzv::CharacterState state(mzv::default_precision(ks, margin));
    return lemma ? mzv::zeta_ems_lemma(ks, state) : mzv::zeta_ems_birkhoff(ks, state);
  };
  if (kind == "ems") {
    if (pipeline == "birkhoff" || pipeline == "all") row.values.emplace_back("birkhoff", character_value(false));
    if (pipeline == "lemma" || pipeline == "all") row.values.emplace_back("lemma", character_value(true));
    if (pipeline == "closed" || pipeline == "all") row.values.emplace_back("closed", mzv::zeta_ems_closed(ks));
    if (pipeline == "recurrence" || pipeline == "all")
      row.values.emplace_back("recurrence", mzv::zeta_ems_recurrence(ks));
  } else {
    if (pipeline == "closed" || pipeline == "all") row.values.emplace_back("closed", mzv::zeta_fkmt(ks));
    if (pipeline == "recurrence" || pipeline == "all")
      row.values.emplace_back("recurrence", mzv::zeta_fkmt_recurrence(ks));
  }
  for (const auto& [name, v] : row.values)
    if (v != row.values.front().second) row.agreed = false;
  print_rows({row}, format, decimal);
  return row.agreed ? kExitOk : kExitDisagreement;
}

int run_table(const std::string& kind, int max_depth, int max_weight, const std::string& format,
              int threads, bool decimal) {
  std::vector<mzv::Composition> all;
  for (int n = 1; n <= max_depth; ++n)
    for (const auto& ks : mzv::compositions_with_sum_at_most(n, max_weight)) all.push_back(ks);
  std::vector<mzv::Rational> values(all.size());
  auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      values[i] = kind == "ems" ? mzv::zeta_ems_closed(all[i]) : mzv::zeta_fkmt(all[i]);
  };
  if (threads <= 1) {
    eval_range(0, all.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (all.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
      std::size_t lo = static_cast<std::size_t>(t) * chunk;
      std::size_t hi = std::min(all.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(eval_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  std::vector<ValueRow> rows;
  rows.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    ValueRow row(all[i]);
    row.kind = kind;
    row.values.emplace_back("closed", values[i]);
    rows.push_back(std::move(row));
  }
  print_rows(rows, format, decimal);
  return kExitOk;
}

int run_verify(const std::string& suite, std::optional<int> depth, std::optional<int> weight) {
  using mzv::CheckList;
  CheckList checks;
  auto extend = [&](CheckList more) {
    checks.insert(checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (suite == "coproduct" || suite == "all") {
    extend(mzv::verify_coproduct_oracle(depth.value_or(4), 2, 6));
    extend(mzv::verify_coproduct_laws(weight.value_or(6)));
  }
  if (suite == "shuffle" || suite == "all") {
    extend(mzv::verify_shuffle_homomorphism(weight.value_or(4)));
    extend(mzv::verify_ideal_annihilation(3));
  }
  if (suite == "birkhoff-vs-closed" || suite == "all") {
    extend(mzv::verify_pipeline_agreement(depth.value_or(3), weight.value_or(6)));
    extend(mzv::verify_birkhoff_shapes(8));
    extend(mzv::verify_known_values());
  }
  if (suite == "thm321" || suite == "all")
    extend(mzv::verify_equivalence(depth.value_or(3), weight.value_or(8)));
  if (suite == "recurrence" || suite == "all") {
    extend(mzv::verify_recurrence_identities(depth.value_or(3), weight.value_or(6)));
    extend(mzv::verify_prefix_split(depth.value_or(3), weight.value_or(6)));
    extend(mzv::verify_genfn_factorization(depth.value_or(3), 8));
    extend(mzv::verify_recurrence_pipeline(depth.value_or(3), weight.value_or(6)));
  }
  if (suite == "frak-h" || suite == "all")
    extend(mzv::verify_genfn_chain(depth.value_or(2), 2, std::max(3, weight.value_or(4))));
  if (suite == "conversions" || suite == "all") extend(mzv::verify_conversions(weight.value_or(6)));
  bool ok = true;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "[ ok ] " : "[FAIL] ") << c.name;
    if (!c.ok && !c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << "\n";
    ok = ok && c.ok;
  }
  std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << " (" << checks.size() << " run)\n";
  return ok ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact renormalized and desingularized multiple zeta values at non-positive integers"};
  app.require_subcommand(1);

  std::string kind, ks_text, pipeline = "all", format = "plain", suite = "all";
  int max_depth = 2, max_weight = 6, threads = 1, margin = 4, value_cap = kDefaultWordCap;
  std::optional<int> verify_depth, verify_weight;
  bool decimal = false;

  CLI::App* value = app.add_subcommand("value", "Compute one zeta value through the chosen pipelines");
  value->add_option("kind", kind, "ems or fkmt")->required()->check(CLI::IsMember({"ems", "fkmt"}));
  value->add_option("composition", ks_text, "arguments k1,k2,... meaning zeta(-k1,...,-kn)")->required();
  value->add_option("--pipeline", pipeline, "birkhoff|lemma|closed|recurrence|all")
      ->check(CLI::IsMember({"birkhoff", "lemma", "closed", "recurrence", "all"}));
  value->add_option("--format", format, "plain|json|csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  value->add_option("--max-weight", value_cap, "word-weight cap for the character pipelines");
  value->add_option("--precision-margin", margin, "extra tracked series terms")->check(CLI::PositiveNumber);
  value->add_flag("--decimal", decimal, "add an approximate decimal column");

  CLI::App* table = app.add_subcommand("table", "Tabulate values over all small compositions");
  table->add_option("kind", kind, "ems or fkmt")->required()->check(CLI::IsMember({"ems", "fkmt"}));
  table->add_option("--max-depth", max_depth, "largest depth n")->check(CLI::PositiveNumber);
  table->add_option("--max-weight", max_weight, "largest k1+...+kn")->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "plain|json|csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  table->add_option("--parallel", threads, "worker threads")->check(CLI::PositiveNumber);
  table->add_flag("--decimal", decimal, "add an approximate decimal column");

  CLI::App* verify = app.add_subcommand("verify", "Machine-check the library's identities");
  verify->add_option("suite", suite, "coproduct|shuffle|birkhoff-vs-closed|thm321|recurrence|frak-h|conversions|all")
      ->check(CLI::IsMember({"coproduct", "shuffle", "birkhoff-vs-closed", "thm321", "recurrence",
                             "frak-h", "conversions", "all"}));
  verify->add_option("--depth", verify_depth, "suite-specific depth scale");
  verify->add_option("--weight", verify_weight, "suite-specific weight/degree scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (value->parsed()) return run_value(kind, ks_text, pipeline, format, value_cap, margin, decimal);
    if (table->parsed()) return run_table(kind, max_depth, max_weight, format, threads, decimal);
    return run_verify(suite, verify_depth, verify_weight);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagreement;
  }
}
