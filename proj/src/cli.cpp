#include "parkseq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "parkseq/core.hpp"
#include "parkseq/strehl.hpp"

namespace parkseq::cli {

using Json = nlohmann::ordered_json;

std::vector<std::uint32_t> parse_positive_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  std::vector<std::uint32_t> values;
  text = trim(text);
  if (text.empty()) return values;

  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    std::uint32_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value == 0) {
      throw InvalidInput("expected comma-separated positive integers, got \"" + std::string(token) + "\"");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

namespace {

std::string join(const std::vector<std::uint32_t>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

std::string join(std::span<const std::uint32_t> values) {
  return join(std::vector<std::uint32_t>(values.begin(), values.end()));
}

// Counts are written as decimal strings so that values beyond 64 bits survive.
std::string big(const BigInt& value) { return value.str(); }

const char* bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- park

int cmd_park(const RunConfig& config, std::ostream& out) {
  const CarSizes sizes(config.sizes);
  const Preferences prefs(*config.prefs);
  const ParkingOutcome outcome = simulate_parking(sizes, config.z, prefs);

  struct Fields {
    std::string outcome;
    const LotLayout* layout;
    std::optional<std::size_t> car, first_empty, blocked_at;
  };
  const Fields fields = std::visit(
      [](const auto& o) -> Fields {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Parked>) {
          return {"parked", &o.layout, std::nullopt, std::nullopt, std::nullopt};
        } else if constexpr (std::is_same_v<T, Collision>) {
          return {"collision", &o.layout, o.car, o.first_empty, o.blocked_at};
        } else {
          return {"overflow", &o.layout, o.car, o.first_empty, std::nullopt};
        }
      },
      outcome);

  switch (config.format) {
    case OutputFormat::Plain:
      out << fields.layout->to_string() << '\n';
      if (const auto* c = std::get_if<Collision>(&outcome)) {
        out << "collision: car " << c->car << " found empty spot " << c->first_empty << " but spot " << c->blocked_at
            << " is occupied\n";
      } else if (const auto* o = std::get_if<Overflow>(&outcome)) {
        const std::size_t m = o->layout.length();
        if (o->first_empty > m) {
          out << "overflow: car " << o->car << " finds no empty spot at or after " << prefs.car(o->car) << '\n';
        } else {
          out << "overflow: car " << o->car << " needs spots " << o->first_empty << ".."
              << o->first_empty + sizes.car(o->car) - 1 << " but the lot ends at " << m << '\n';
        }
      }
      break;
    case OutputFormat::Tsv: {
      auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
      out << "sizes\tz\tprefs\toutcome\tcar\tfirst_empty\tblocked_at\tlayout\n";
      out << join(config.sizes) << '\t' << config.z << '\t' << join(*config.prefs) << '\t' << fields.outcome << '\t'
          << opt(fields.car) << '\t' << opt(fields.first_empty) << '\t' << opt(fields.blocked_at) << '\t'
          << fields.layout->to_string() << '\n';
      break;
    }
    case OutputFormat::Json: {
      Json record;
      record["sizes"] = config.sizes;
      record["z"] = config.z;
      record["prefs"] = *config.prefs;
      record["outcome"] = fields.outcome;
      if (fields.car) record["car"] = *fields.car;
      if (fields.first_empty) record["first_empty"] = *fields.first_empty;
      if (fields.blocked_at) record["blocked_at"] = *fields.blocked_at;
      record["layout"] = fields.layout->to_string();
      out << record.dump() << '\n';
      break;
    }
  }
  return is_parked(outcome) ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- count

EnumerationOptions enumeration_options(const RunConfig& config) {
  return {config.budget, !config.force, config.workers};
}

int cmd_count(const RunConfig& config, std::ostream& out) {
  const CarSizes sizes(config.sizes);
  const BigInt formula = count_by_formula(sizes, config.z);
  std::optional<CountReport> report;
  if (config.enumerate) report = compare_with_enumeration(sizes, config.z, enumeration_options(config));

  switch (config.format) {
    case OutputFormat::Plain:
      if (report) {
        out << "formula=" << big(formula) << " enumerated=" << big(report->enumerated)
            << " match=" << bool_text(report->match) << " tuples_scanned=" << big(report->tuples_scanned) << '\n';
      } else {
        out << big(formula) << '\n';
      }
      break;
    case OutputFormat::Tsv:
      out << "sizes\tz\tformula";
      if (report) out << "\tenumerated\tmatch\ttuples_scanned";
      out << '\n' << join(config.sizes) << '\t' << config.z << '\t' << big(formula);
      if (report) {
        out << '\t' << big(report->enumerated) << '\t' << bool_text(report->match) << '\t'
            << big(report->tuples_scanned);
      }
      out << '\n';
      break;
    case OutputFormat::Json: {
      Json record;
      record["sizes"] = config.sizes;
      record["z"] = config.z;
      record["formula"] = big(formula);
      if (report) {
        record["enumerated"] = big(report->enumerated);
        record["match"] = report->match;
        record["tuples_scanned"] = big(report->tuples_scanned);
      }
      out << record.dump() << '\n';
      break;
    }
  }
  return (!report || report->match) ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- verify

struct VerifyRow {
  std::string suite;
  std::string instance;
  std::string method;
  std::string lhs;
  std::string rhs;
  bool match;
};

// Every vector in [1, y_max]^n, odometer order.
void for_each_size_vector(std::uint32_t n, std::uint32_t y_max, const std::function<void(const CarSizes&)>& fn) {
  std::vector<std::uint32_t> sizes(n, 1);
  while (true) {
    fn(CarSizes(sizes));
    std::size_t pos = n;
    while (pos > 0 && sizes[pos - 1] == y_max) sizes[--pos] = 1;
    if (pos == 0) return;
    ++sizes[pos - 1];
  }
}

std::vector<IndexSet> identity_sets(const RunConfig& config, bool nonempty_only) {
  if (config.set) return {*config.set};
  std::vector<IndexSet> sets;
  for_each_split(IndexSet::initial_segment(config.n_max), [&](std::uint64_t, const Split& split) {
    if (!(nonempty_only && split.left.empty())) sets.push_back(split.left);
  });
  std::stable_sort(sets.begin(), sets.end(),
                   [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
  return sets;
}

void run_identity_suite(const RunConfig& config, Identity identity, std::vector<VerifyRow>& rows) {
  const std::string suite = to_string(identity);
  for (const IndexSet& A : identity_sets(config, identity == Identity::Easy)) {
    if (identity == Identity::Easy && A.empty()) continue;
    const std::string instance = "A=" + A.to_string();
    if (A.size() <= kSymbolicBudget) {
      IdentitySides sides;
      switch (identity) {
        case Identity::Easy:
          sides = easy_identity_sides(A);
          break;
        case Identity::Sheffer:
          sides = sheffer_convolution_sides(A);
          break;
        case Identity::Binomial:
          sides = binomial_convolution_sides(A);
          break;
      }
      rows.push_back({suite, instance, "symbolic", sides.lhs.to_string(), sides.rhs.to_string(), sides.holds()});
    } else {
      const RandomCheckReport report = random_identity_check_report(identity, A, {config.trials, config.seed, {}});
      rows.push_back({suite, instance, "randomized", big(report.lhs), big(report.rhs), report.agrees});
    }
  }
}

void run_recurrence_suite(const RunConfig& config, std::vector<VerifyRow>& rows) {
  for (std::uint32_t n = 0; n <= config.n_max; ++n) {
    for_each_size_vector(n, config.y_max, [&](const CarSizes& sizes) {
      for (std::uint32_t next = 1; next <= config.y_max; ++next) {
        for (std::uint32_t z = 1; z <= config.z_max; ++z) {
          const RecurrenceReport report = verify_recurrence(sizes, next, z);
          rows.push_back({"recurrence",
                          "sizes=" + join(sizes.values()) + " next=" + std::to_string(next) + " z=" + std::to_string(z),
                          "exact", big(report.direct), big(report.decomposed), report.match});
        }
      }
    });
  }
}

void run_specialization_suite(const RunConfig& config, std::vector<VerifyRow>& rows) {
  for (std::uint32_t n = 0; n <= config.n_max; ++n) {
    for_each_size_vector(n, config.y_max, [&](const CarSizes& sizes) {
      for (std::uint32_t z = 1; z <= config.z_max; ++z) {
        const BigInt lhs = f_as_t_specialization(sizes, z);
        const BigInt rhs = count_by_formula(sizes, z);
        rows.push_back({"specialization", "sizes=" + join(sizes.values()) + " z=" + std::to_string(z), "exact",
                        big(lhs), big(rhs), lhs == rhs});
      }
    });
  }
}

inline constexpr std::uint32_t kVerifyMaxN = 8;
inline constexpr std::uint32_t kSpecializationMaxN = 6;
inline constexpr std::uint32_t kVerifyMaxY = 9;
inline constexpr std::uint32_t kVerifyMaxZ = 64;

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const std::string& suite = config.suite;
  const bool all = suite == "all";
  const bool sweeps_sizes = all || suite == "recurrence" || suite == "specialization";
  if (config.n_max > kVerifyMaxN) {
    throw InvalidInput("--n-max must be at most " + std::to_string(kVerifyMaxN));
  }
  if ((all || suite == "specialization") && config.n_max > kSpecializationMaxN) {
    throw InvalidInput("the specialization suite expands t symbolically; --n-max must be at most " +
                       std::to_string(kSpecializationMaxN));
  }
  if (sweeps_sizes && (config.y_max < 1 || config.y_max > kVerifyMaxY)) {
    throw InvalidInput("--y-max must lie in [1, " + std::to_string(kVerifyMaxY) + "]");
  }
  if (sweeps_sizes && (config.z_max < 1 || config.z_max > kVerifyMaxZ)) {
    throw InvalidInput("--z-max must lie in [1, " + std::to_string(kVerifyMaxZ) + "]");
  }
  if (config.set && config.set->size() > kMaxSplitGround) {
    throw InvalidInput("--set has too many elements");
  }

  std::vector<VerifyRow> rows;
  if (all || suite == "recurrence") run_recurrence_suite(config, rows);
  if (all || suite == "easy") run_identity_suite(config, Identity::Easy, rows);
  if (all || suite == "sheffer") run_identity_suite(config, Identity::Sheffer, rows);
  if (all || suite == "binomial") run_identity_suite(config, Identity::Binomial, rows);
  if (all || suite == "specialization") run_specialization_suite(config, rows);

  const auto mismatches = std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.match; });
  switch (config.format) {
    case OutputFormat::Plain:
      for (const VerifyRow& r : rows) {
        out << r.suite << ' ' << r.instance << " [" << r.method << "] lhs=" << r.lhs << " rhs=" << r.rhs
            << " match=" << bool_text(r.match) << '\n';
      }
      out << rows.size() - static_cast<std::size_t>(mismatches) << " of " << rows.size() << " rows match\n";
      break;
    case OutputFormat::Tsv:
      out << "suite\tinstance\tmethod\tlhs\trhs\tmatch\n";
      for (const VerifyRow& r : rows) {
        out << r.suite << '\t' << r.instance << '\t' << r.method << '\t' << r.lhs << '\t' << r.rhs << '\t'
            << bool_text(r.match) << '\n';
      }
      break;
    case OutputFormat::Json:
      for (const VerifyRow& r : rows) {
        Json record;
        record["suite"] = r.suite;
        record["instance"] = r.instance;
        record["method"] = r.method;
        record["lhs"] = r.lhs;
        record["rhs"] = r.rhs;
        record["match"] = r.match;
        out << record.dump() << '\n';
      }
      break;
  }
  return mismatches == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- table

inline constexpr std::uint32_t kTableMaxN = 12;

CarSizes family_member(const RunConfig& config, std::uint32_t n) {
  std::vector<std::uint32_t> sizes(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    switch (config.family) {
      case TableFamily::Ones:
        sizes[k] = 1;
        break;
      case TableFamily::Constant:
        sizes[k] = config.constant_size;
        break;
      case TableFamily::Pattern:
        sizes[k] = config.pattern[k % config.pattern.size()];
        break;
    }
  }
  return CarSizes(std::move(sizes));
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  if (config.n_max > kTableMaxN) {
    throw InvalidInput("--n-max must be at most " + std::to_string(kTableMaxN));
  }
  if (config.family == TableFamily::Pattern && config.pattern.empty()) {
    throw InvalidInput("--family pattern needs a nonempty --pattern");
  }
  if (config.family == TableFamily::Constant && config.constant_size < 1) {
    throw InvalidInput("--k must be positive");
  }
  if (!config.single_z && config.z_max < 1) {
    throw InvalidInput("--z-max must be at least 1");
  }
  const std::uint32_t z_lo = config.single_z ? config.z : 1;
  const std::uint32_t z_hi = config.single_z ? config.z : config.z_max;

  if (config.format == OutputFormat::Tsv) {
    out << "n\tz\tcount";
    if (config.enumerate) out << "\tenumerated\tmatch";
    out << '\n';
  }
  bool all_match = true;
  for (std::uint32_t z = z_lo; z <= z_hi; ++z) {
    for (std::uint32_t n = 0; n <= config.n_max; ++n) {
      const CarSizes sizes = family_member(config, n);
      const BigInt count = count_by_formula(sizes, z);
      std::optional<BigInt> enumerated;
      if (config.enumerate) {
        try {
          enumerated = count_by_enumeration(sizes, z, enumeration_options(config));
        } catch (const BudgetExceeded&) {
          // Rows beyond the budget carry the formula only.
        }
      }
      const bool match = !enumerated || *enumerated == count;
      all_match = all_match && match;

      switch (config.format) {
        case OutputFormat::Plain:
          out << "n=" << n << " z=" << z << " count=" << big(count);
          if (enumerated) out << " enumerated=" << big(*enumerated) << " match=" << bool_text(match);
          out << '\n';
          break;
        case OutputFormat::Tsv:
          out << n << '\t' << z << '\t' << big(count);
          if (config.enumerate) {
            out << '\t' << (enumerated ? big(*enumerated) : "-") << '\t' << (enumerated ? bool_text(match) : "-");
          }
          out << '\n';
          break;
        case OutputFormat::Json: {
          Json record;
          record["n"] = n;
          record["sizes"] = std::vector<std::uint32_t>(sizes.values().begin(), sizes.values().end());
          record["z"] = z;
          record["formula"] = big(count);
          if (enumerated) {
            record["enumerated"] = big(*enumerated);
            record["match"] = match;
          }
          out << record.dump() << '\n';
          break;
        }
      }
    }
  }
  return all_match ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- parsing

const std::map<std::string, OutputFormat> kFormats{
    {"plain", OutputFormat::Plain}, {"tsv", OutputFormat::Tsv}, {"json", OutputFormat::Json}};

void add_format_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output encoding")->check(CLI::IsMember({"plain", "tsv", "json"}));
}

std::uint64_t budget_from_environment() {
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr) return kDefaultEnumerationBudget;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || value < 1) {
    throw InvalidInput(std::string(kBudgetEnvVar) + " must be a positive integer, got \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parking sequences for variable-size cars behind a trailer: simulate, count, verify"};
  app.name("parkseq");
  app.require_subcommand(1);

  RunConfig config;
  std::string sizes_text;
  std::string prefs_text;
  std::string set_text;
  std::string pattern_text;
  std::string format_text;
  std::string family_text = "ones";
  std::optional<std::uint64_t> budget_flag;

  auto* park = app.add_subcommand("park", "Park one preference sequence and print the lot");
  park->add_option("--sizes", sizes_text, "Car sizes, e.g. 2,2,1 (empty for no cars)")->required();
  park->add_option("-z,--z", config.z, "Trailer parameter; the trailer fills spots 1..z-1")->required();
  park->add_option("--prefs", prefs_text, "Preferred spots, e.g. 5,6,2")->required();
  add_format_option(park, format_text);

  auto* count = app.add_subcommand("count", "Count parking sequences by the product formula");
  count->add_option("--sizes", sizes_text, "Car sizes")->required();
  count->add_option("-z,--z", config.z, "Trailer parameter")->required();
  count->add_flag("--enumerate", config.enumerate, "Also count by brute force and compare");
  count->add_flag("--force", config.force, "Ignore the enumeration budget");
  count->add_option("--budget", budget_flag, "Maximum number of preference tuples to enumerate");
  count->add_option("--workers", config.workers, "Threads for enumeration")->check(CLI::Range(1U, 256U));
  add_format_option(count, format_text);

  auto* verify = app.add_subcommand("verify", "Check the counting recurrence and the polynomial identities");
  verify->add_option("suite", config.suite, "recurrence | easy | sheffer | binomial | specialization | all")
      ->check(CLI::IsMember({"recurrence", "easy", "sheffer", "binomial", "specialization", "all"}));
  verify->add_option("--n-max", config.n_max, "Largest number of cars / largest ground set {1..n}");
  verify->add_option("--y-max", config.y_max, "Largest car size in the sweep");
  verify->add_option("--z-max", config.z_max, "Largest trailer parameter in the sweep");
  verify->add_option("--set", set_text, "Check the identities on this index set only, e.g. 1,2");
  verify->add_option("--trials", config.trials, "Random points per randomized check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "Seed for randomized checks");
  add_format_option(verify, format_text);

  auto* table = app.add_subcommand("table", "Tabulate counts for a family of size vectors");
  table->add_option("--family", family_text, "ones | const | pattern")
      ->check(CLI::IsMember({"ones", "const", "pattern"}));
  table->add_option("--k", config.constant_size, "Car size for --family const");
  table->add_option("--pattern", pattern_text, "Sizes repeated cyclically for --family pattern");
  std::uint32_t table_n_max = 5;
  std::uint32_t table_z_max = 1;
  table->add_option("--n-max", table_n_max, "Rows for n = 0..n-max");
  auto* table_z = table->add_option("-z,--z", config.z, "A single trailer parameter");
  table->add_option("--z-max", table_z_max, "Rows for z = 1..z-max")->excludes(table_z);
  table->add_flag("--enumerate", config.enumerate, "Add a brute-force column where within budget");
  table->add_option("--budget", budget_flag, "Maximum number of preference tuples per row");
  add_format_option(table, format_text);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    config.subcommand = chosen->get_name();
    if (config.subcommand == "verify" || config.subcommand == "table") config.format = OutputFormat::Tsv;
    if (config.subcommand == "table") {
      config.n_max = table_n_max;
      config.z_max = table_z_max;
    }
    if (!format_text.empty()) config.format = kFormats.at(format_text);

    config.sizes = parse_positive_list(sizes_text);
    if (!prefs_text.empty() || config.subcommand == "park") config.prefs = parse_positive_list(prefs_text);
    if (!set_text.empty()) config.set = IndexSet(parse_positive_list(set_text));
    if (!pattern_text.empty()) config.pattern = parse_positive_list(pattern_text);
    config.family = family_text == "const"     ? TableFamily::Constant
                    : family_text == "pattern" ? TableFamily::Pattern
                                               : TableFamily::Ones;
    config.single_z = table_z->count() > 0;
    config.budget = budget_flag ? *budget_flag : budget_from_environment();
    if (config.budget < 1) throw InvalidInput("--budget must be at least 1");

    if (config.subcommand == "park") return cmd_park(config, out);
    if (config.subcommand == "count") return cmd_count(config, out);
    if (config.subcommand == "verify") return cmd_verify(config, out);
    return cmd_table(config, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (pass --force or raise --budget / " << kBudgetEnvVar << ")\n";
    return kExitInvalid;
  } catch (const SymbolicBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace parkseq::cli
