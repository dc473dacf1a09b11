// ffhg: finite-field hypergeometric functions and trace-of-Frobenius checks.
//
// Exit codes: 0 verified / success, 1 mathematical mismatch, 2 invalid input.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffhg/character.hpp"
#include "ffhg/cyclotomic.hpp"
#include "ffhg/error.hpp"
#include "ffhg/field.hpp"
#include "ffhg/hypergeometric.hpp"
#include "ffhg/picard.hpp"
#include "ffhg/report.hpp"
#include "ffhg/verify.hpp"

namespace {

using namespace ffhg;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct FieldOptions {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::uint32_t e = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "field order q = p^e");
    cmd->add_option("--p", p, "characteristic (with --e)");
    cmd->add_option("--e", e, "extension degree (with --p)");
  }
  Field resolve() const {
    if (q && p) throw InvalidInput("give either --q or --p/--e, not both");
    if (q) return Field::of_order(*q);
    if (p) return Field::make(*p, e);
    throw InvalidInput("a field is required: --q Q or --p P [--e E]");
  }
};

std::string complex_text(const Cyclotomic& v) {
  const auto z = v.to_complex();
  std::ostringstream os;
  os << std::setprecision(15) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

nlohmann::json value_json(const Cyclotomic& v) {
  auto j = to_json(v);
  j["text"] = v.to_string();
  const auto z = v.to_complex();
  j["complex"] = {z.real(), z.imag()};
  return j;
}

void print_value(const std::string& label, const Cyclotomic& v, bool json) {
  if (json) {
    std::cout << value_json(v).dump(2) << '\n';
    return;
  }
  std::cout << label << " = " << v.to_string() << "  in Q(zeta_" << v.order() << ")\n";
  std::cout << "approx   = " << complex_text(v) << '\n';
}

void print_character(const char* name, const Character& chi) {
  std::cerr << name << ": exponent " << chi.exponent() << ", order " << chi.order() << '\n';
}

std::vector<Field> fields_from(const std::vector<std::uint64_t>& qs) {
  std::vector<Field> out;
  for (const auto q : qs) out.push_back(Field::of_order(q));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field hypergeometric functions and trace-of-Frobenius verification"};
  app.require_subcommand(1);

  // field
  auto* field_cmd = app.add_subcommand("field", "Construct F_q and print its modulus and generator");
  FieldOptions field_opts;
  field_opts.attach(field_cmd);
  std::optional<std::uint64_t> dlog_of;
  field_cmd->add_option("--dlog", dlog_of, "also print the discrete logarithm of this element code");
  bool field_json = false;
  field_cmd->add_flag("--json", field_json, "JSON output");

  // count
  auto* count_cmd = app.add_subcommand("count", "Point count and trace of Frobenius for one curve");
  FieldOptions count_field;
  count_field.attach(count_cmd);
  std::uint64_t count_lambda = 0;
  std::optional<std::uint64_t> count_mu;
  std::string family_text = "picard";
  std::string count_form = "single";
  bool count_json = false;
  count_cmd->add_option("--lambda", count_lambda, "lambda (element code)")->required();
  count_cmd->add_option("--mu", count_mu, "mu (element code, Picard family)");
  count_cmd->add_option("--family", family_text, "picard or legendre")->check(CLI::IsMember({"picard", "legendre"}));
  count_cmd->add_option("--form", count_form, "F1 form used for the trace formula: def, single, inverted");
  count_cmd->add_flag("--json", count_json, "JSON output");

  // f1
  auto* f1_cmd = app.add_subcommand("f1", "Evaluate F1(A; B1, B2; C | x, y)");
  FieldOptions f1_field;
  f1_field.attach(f1_cmd);
  std::int64_t f1_a = 0, f1_b1 = 0, f1_b2 = 0, f1_c = 0;
  std::uint64_t f1_x = 0, f1_y = 0;
  std::string f1_form = "def";
  bool f1_json = false;
  f1_cmd->add_option("--A", f1_a, "character exponent of A")->required();
  f1_cmd->add_option("--B1", f1_b1, "character exponent of B1")->required();
  f1_cmd->add_option("--B2", f1_b2, "character exponent of B2")->required();
  f1_cmd->add_option("--C", f1_c, "character exponent of C")->required();
  f1_cmd->add_option("--x", f1_x, "x (element code)")->required();
  f1_cmd->add_option("--y", f1_y, "y (element code)")->required();
  f1_cmd->add_option("--form", f1_form, "def, single or inverted");
  f1_cmd->add_flag("--json", f1_json, "JSON output");

  // 2f1
  auto* gauss_cmd = app.add_subcommand("2f1", "Evaluate 2F1(A, B; C | x)");
  FieldOptions gauss_field;
  gauss_field.attach(gauss_cmd);
  std::int64_t g_a = 0, g_b = 0, g_c = 0;
  std::uint64_t g_x = 0;
  bool g_json = false;
  gauss_cmd->add_option("--A", g_a, "character exponent of A")->required();
  gauss_cmd->add_option("--B", g_b, "character exponent of B")->required();
  gauss_cmd->add_option("--C", g_c, "character exponent of C")->required();
  gauss_cmd->add_option("--x", g_x, "x (element code)")->required();
  gauss_cmd->add_flag("--json", g_json, "JSON output");

  // table
  auto* table_cmd = app.add_subcommand("table", "One report row per admissible (lambda, mu)");
  FieldOptions table_field;
  table_field.attach(table_cmd);
  std::string table_out;
  bool table_json = false;
  unsigned table_jobs = 1;
  table_cmd->add_option("--out", table_out, "output file (default: standard output)");
  table_cmd->add_flag("--json", table_json, "JSON instead of CSV");
  table_cmd->add_option("--jobs", table_jobs, "worker threads")->check(CLI::Range(1u, 256u));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive or sampled identity checks");
  std::string target;
  std::vector<std::uint64_t> verify_qs;
  std::optional<std::uint32_t> pmax;
  std::uint32_t pmin = 0;
  std::string convention = "greene-all-zero";
  std::uint64_t seed = 1;
  unsigned verify_jobs = 1;
  std::size_t samples = 100;
  std::uint64_t random_q = 31;
  verify_cmd->add_option("target", target, "theorem, koike, lemma21, lemma22 or f1-forms")
      ->required()
      ->check(CLI::IsMember({"theorem", "koike", "lemma21", "lemma22", "f1-forms"}));
  verify_cmd->add_option("--q", verify_qs, "field orders to check (repeatable)");
  verify_cmd->add_option("--pmax", pmax, "largest prime for prime sweeps");
  verify_cmd->add_option("--pmin", pmin, "smallest prime for prime sweeps");
  verify_cmd->add_option("--convention", convention, "greene-all-zero or paper-trivial-one (lemma21)");
  verify_cmd->add_option("--seed", seed, "seed for random character quadruples (f1-forms)");
  verify_cmd->add_option("--samples", samples, "number of random quadruples (f1-forms)");
  verify_cmd->add_option("--random-q", random_q, "field for random quadruples, 0 to skip (f1-forms)");
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*field_cmd) {
      const Field f = field_opts.resolve();
      if (field_json) {
        nlohmann::json j{{"p", f.p()}, {"e", f.e()}, {"q", f.q()},
                         {"modulus", std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end())},
                         {"generator", f.generator().code}};
        if (dlog_of) j["dlog"] = f.dlog(f.element(*dlog_of));
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << f.describe() << '\n';
        std::cout << "q mod 3 = " << f.q() % 3 << (f.q() % 3 == 1 ? " (cubic character exists)" : "") << '\n';
        if (dlog_of) std::cout << "dlog(" << *dlog_of << ") = " << f.dlog(f.element(*dlog_of)) << '\n';
      }
      return kExitOk;
    }

    if (*count_cmd) {
      const Field f = count_field.resolve();
      const Element lambda = f.element(count_lambda);
      if (family_text == "legendre") {
        if (count_mu) throw InvalidInput("--mu does not apply to the Legendre family");
        const auto report = koike_check(CurveParams::legendre(f, lambda));
        if (count_json) std::cout << to_json(report).dump(2) << '\n';
        else std::cout << format_report(report);
        return report.match ? kExitOk : kExitMismatch;
      }
      if (!count_mu) throw InvalidInput("--mu is required for the Picard family");
      const auto params = CurveParams::picard(f, lambda, f.element(*count_mu));
      require_cubic_character(f);
      HypergeometricEvaluator ev(f);
      const auto theorem = trace_via_theorem(params, ev, parse_f1_form(count_form));
      TraceReport report{params};
      report.count = count_bruteforce(params);
      report.trace = 1 + static_cast<std::int64_t>(f.q()) - report.count;
      report.rhs = theorem.value;
      report.rhs_integer = theorem.integer;
      report.match = report.rhs_integer && *report.rhs_integer == report.trace;
      if (count_json) {
        auto j = to_json(report);
        j["count_charsum"] = count_charsum(params);
        j["f1_terms"] = {to_json(theorem.terms[0]), to_json(theorem.terms[1])};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << format_report(report, &theorem);
        std::cout << "charsum    " << count_charsum(params) << "  (cubic character count)\n";
      }
      return report.match ? kExitOk : kExitMismatch;
    }

    if (*f1_cmd) {
      const Field f = f1_field.resolve();
      const F1Spec spec{Character(f, f1_a), Character(f, f1_b1), Character(f, f1_b2), Character(f, f1_c),
                        f.element(f1_x), f.element(f1_y)};
      print_character("A", spec.a);
      print_character("B1", spec.b1);
      print_character("B2", spec.b2);
      print_character("C", spec.c);
      HypergeometricEvaluator ev(f);
      print_value("F1", ev.ghosh_f1(spec, parse_f1_form(f1_form)).compressed(), f1_json);
      return kExitOk;
    }

    if (*gauss_cmd) {
      const Field f = gauss_field.resolve();
      const Gauss2F1Spec spec{Character(f, g_a), Character(f, g_b), Character(f, g_c), f.element(g_x)};
      print_character("A", spec.a);
      print_character("B", spec.b);
      print_character("C", spec.c);
      print_value("2F1", greene_2f1(spec).compressed(), g_json);
      return kExitOk;
    }

    if (*table_cmd) {
      const Field f = table_field.resolve();
      std::cerr << "table: " << f.describe() << ", " << table_jobs << " worker(s)\n";
      const auto rows = picard_table(f, table_jobs);
      std::ofstream file;
      if (!table_out.empty()) {
        file.open(table_out, std::ios::binary);
        if (!file) throw InvalidInput("cannot open output file '" + table_out + "'");
      }
      std::ostream& os = table_out.empty() ? std::cout : file;
      if (table_json) os << to_json(rows).dump(2) << '\n';
      else write_csv(os, rows);
      std::cerr << "table: " << rows.size() << " rows\n";
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto start = std::chrono::steady_clock::now();
      std::vector<Field> fields = fields_from(verify_qs);
      VerifySummary summary;
      if (target == "theorem") {
        if (pmax || verify_qs.empty()) {
          auto primes = primes_one_mod_three(pmin ? pmin : 7, pmax.value_or(103));
          fields.insert(fields.begin(), primes.begin(), primes.end());
          if (verify_qs.empty() && !pmax) fields.push_back(Field::make(5, 2));
        }
        summary = verify_theorem(fields, verify_jobs);
      } else if (target == "koike") {
        if (pmax || verify_qs.empty()) {
          auto primes = odd_primes(pmin ? pmin : 5, pmax.value_or(97));
          fields.insert(fields.begin(), primes.begin(), primes.end());
        }
        summary = verify_koike(fields, verify_jobs);
      } else if (target == "lemma21") {
        if (fields.empty()) fields = fields_from({7, 13, 16, 25});
        summary = verify_lemma21(fields, parse_convention(convention));
      } else if (target == "lemma22") {
        if (fields.empty()) fields = fields_from({7, 13});
        summary = verify_lemma22(fields);
      } else {
        const bool defaults = fields.empty();
        if (defaults) fields = fields_from({7, 13});
        std::optional<Field> random_field;
        // with explicit --q lists the random sample only runs when asked for
        const bool random_requested = verify_cmd->get_option("--random-q")->count() > 0;
        if (random_q != 0 && (defaults || random_requested)) random_field = Field::of_order(random_q);
        summary = verify_f1_forms(fields, random_field, samples, seed);
      }
      print_summary(std::cout, summary);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      std::cerr << "verify " << target << ": " << summary.total_cases() << " cases in " << std::fixed
                << std::setprecision(2) << elapsed.count() << " s\n";
      return summary.ok() ? kExitOk : kExitMismatch;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const IntegralityError& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
