#include "ffhg/report.hpp"

#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

namespace ffhg {

namespace {

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidInput("expected an integer or a decimal string");
}

}  // namespace

nlohmann::json to_json(const Cyclotomic& value) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : value.coefficients()) coeffs.push_back({integer_json(c.get_num()), integer_json(c.get_den())});
  return {{"order", value.order()}, {"coefficients", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("order").get<std::uint32_t>();
    std::vector<Rational> coeffs;
    for (const auto& pair : j.at("coefficients")) {
      Rational r(integer_from_json(pair.at(0)), integer_from_json(pair.at(1)));
      r.canonicalize();
      coeffs.push_back(r);
    }
    return Cyclotomic::from_coefficients(n, coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed cyclotomic JSON: ") + e.what());
  }
}

nlohmann::json to_json(const TraceReport& r) {
  nlohmann::json j;
  j["q"] = r.params.field.q();
  j["lambda"] = r.params.lambda.code;
  if (r.params.family == Family::Picard) j["mu"] = r.params.mu.code;
  else j["mu"] = nullptr;
  j["count"] = r.count;
  j["trace"] = r.trace;
  j["rhs_trace"] = r.rhs_integer ? nlohmann::json(*r.rhs_integer) : nlohmann::json(nullptr);
  j["match"] = r.match;
  j["rhs"] = to_json(r.rhs);
  return j;
}

nlohmann::json to_json(std::span<const TraceReport> reports) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : reports) rows.push_back(to_json(r));
  return rows;
}

void write_csv(std::ostream& os, std::span<const TraceReport> reports) {
  os << kCsvHeader << '\n';
  for (const auto& r : reports) {
    os << r.params.field.q() << ',' << r.params.lambda.code << ',';
    if (r.params.family == Family::Picard) os << r.params.mu.code;
    os << ',' << r.count << ',' << r.trace << ',';
    if (r.rhs_integer) os << *r.rhs_integer;
    os << ',' << (r.match ? "true" : "false") << '\n';
  }
}

std::string format_report(const TraceReport& r, const TheoremValue* theorem) {
  std::ostringstream os;
  const auto& f = r.params.field;
  os << "field      " << f.describe() << '\n';
  os << "curve      " << (r.params.family == Family::Picard ? "y^3 = x(x-1)(x-lambda)(x-mu)" : "y^2 = x(x-1)(x-lambda)")
     << '\n';
  os << "lambda     " << r.params.lambda.code << '\n';
  if (r.params.family == Family::Picard) os << "mu         " << r.params.mu.code << '\n';
  os << "count      " << r.count << '\n';
  os << "trace      " << r.trace << "  (1 + q - count)\n";
  if (theorem) {
    os << "F1[j=1]    " << theorem->terms[0].to_string() << "  (order " << theorem->terms[0].order() << ")\n";
    os << "F1[j=2]    " << theorem->terms[1].to_string() << "  (order " << theorem->terms[1].order() << ")\n";
  }
  os << "rhs        " << r.rhs.to_string() << "  (order " << r.rhs.order() << ")\n";
  os << "rhs_trace  " << (r.rhs_integer ? std::to_string(*r.rhs_integer) : std::string("non-integral")) << '\n';
  os << "hasse_weil " << (hasse_weil_ok(r) ? "ok" : "VIOLATED") << '\n';
  os << "match      " << (r.match ? "true" : "false") << '\n';
  return os.str();
}

std::vector<TraceReport> picard_table(const Field& f, unsigned jobs) {
  if (f.p() <= 3) throw InvalidInput("Picard curves need characteristic p > 3");
  require_cubic_character(f);
  const auto pairs = admissible_pairs(f);
  std::vector<std::optional<TraceReport>> slots(pairs.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  parallel_shards(pairs.size(), jobs, [&](std::size_t begin, std::size_t end) {
    try {
      HypergeometricEvaluator evaluator(f);
      for (std::size_t i = begin; i < end; ++i)
        slots[i] = picard_report(CurveParams::picard(f, pairs[i].first, pairs[i].second), evaluator);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
  std::vector<TraceReport> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

}  // namespace ffhg
