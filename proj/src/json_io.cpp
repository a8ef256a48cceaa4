#include "tpdilog/json_io.hpp"

#include <charconv>

namespace tpdilog {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON input: " + what); }

int read_n(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) bad("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 2 || n > 64) bad("\"n\" must lie in [2, 64]");
  return n;
}

Rational read_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  bad("expected a rational string, got " + v.dump());
}

std::pair<int, int> parse_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) bad("coordinate key \"" + key + "\" is not \"i,j\"");
  int i = 0, j = 0;
  const char* first = key.data();
  const char* mid = key.data() + comma;
  const char* last = key.data() + key.size();
  if (std::from_chars(first, mid, i).ptr != mid || std::from_chars(mid + 1, last, j).ptr != last)
    bad("coordinate key \"" + key + "\" is not \"i,j\"");
  return {i, j};
}

}  // namespace

Json to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_canonical_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

Json to_json(const Coords& x) {
  Json values = Json::object();
  for (int i = 1; i < x.n(); ++i)
    for (int j = i + 1; j <= x.n(); ++j)
      values[std::to_string(i) + "," + std::to_string(j)] = to_canonical_string(x(i, j));
  return Json{{"n", x.n()}, {"x", std::move(values)}};
}

Json to_json(const IdentityReport& report) {
  Json ids = Json::array();
  for (const auto& [name, r] : report.identities)
    ids.push_back(Json{{"name", name}, {"max_residual", r.max_residual.to_string(6)}, {"pass", r.pass}});
  return Json{{"n", report.n},
              {"seed", report.seed},
              {"precision_bits", report.precision_bits},
              {"trials", report.trials},
              {"identities", std::move(ids)}};
}

bool is_matrix_json(const Json& j) { return j.is_object() && j.contains("entries"); }
bool is_coords_json(const Json& j) { return j.is_object() && j.contains("x"); }

RMatrix matrix_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& rows = j.contains("entries") ? j["entries"] : Json();
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) bad("\"entries\" must hold n rows");
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) bad("row " + std::to_string(i + 1) + " must hold n entries");
    for (int k = 0; k < n; ++k) m(i, k) = read_rational(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Coords coords_from_json(const Json& j) {
  const int n = read_n(j);
  if (!j.contains("x") || !j["x"].is_object()) bad("missing object field \"x\"");
  const Json& values = j["x"];
  if (values.size() != static_cast<std::size_t>(n * (n - 1) / 2)) bad("\"x\" must hold n(n-1)/2 coordinates");
  Coords x(n, Rational(0));
  for (const auto& [key, value] : values.items()) {
    const auto [i, k] = parse_key(key);
    if (i < 1 || k <= i || k > n) bad("coordinate key \"" + key + "\" out of range");
    x(i, k) = read_rational(value);
  }
  require_positive(x);
  return x;
}

IdentityReport report_from_json(const Json& j) {
  IdentityReport r;
  r.n = read_n(j);
  try {
    r.seed = j.at("seed").get<std::uint64_t>();
    r.precision_bits = j.at("precision_bits").get<int>();
    r.trials = j.at("trials").get<int>();
    for (const Json& id : j.at("identities")) {
      IdentityResult result;
      result.max_residual = BigFloat::parse(id.at("max_residual").get<std::string>(), 64);
      result.pass = id.at("pass").get<bool>();
      r.identities.emplace(id.at("name").get<std::string>(), std::move(result));
    }
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("report: ") + e.what());
  }
  return r;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

}  // namespace tpdilog
