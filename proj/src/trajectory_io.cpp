#include "armijo/trajectory_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace armijo::io {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

nlohmann::json point_to_json(const Point& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) arr.push_back(x(i));
  return arr;
}

Point point_from_json(const nlohmann::json& j) {
  Point x(static_cast<Eigen::Index>(j.size()));
  // Non-finite coordinates (a diverged run) are serialized as null.
  for (std::size_t i = 0; i < j.size(); ++i) {
    x(static_cast<Eigen::Index>(i)) =
        j[i].is_null() ? std::numeric_limits<double>::quiet_NaN() : j[i].get<double>();
  }
  return x;
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> optional_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed number '" + text + "'");
  }
  return v;
}

Point parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  Point x(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const double v = parse_double(parts[i]);
    if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
    x(static_cast<Eigen::Index>(i)) = v;
  }
  return x;
}

void write_trajectory_csv(std::ostream& os, const std::vector<StepRecord>& records) {
  const Eigen::Index k = records.empty() ? 0 : records.front().x.size();
  os << "n";
  for (Eigen::Index i = 0; i < k; ++i) os << ",x_" << i;
  os << ",f,grad_norm,delta,armijo_lhs,armijo_rhs\n";
  for (const auto& r : records) {
    os << r.n;
    for (Eigen::Index i = 0; i < k; ++i) os << ',' << format_double(r.x(i));
    os << ',' << format_double(r.f_value) << ',' << format_double(r.grad_norm) << ','
       << format_double(r.delta) << ',';
    if (r.armijo_lhs) os << format_double(*r.armijo_lhs);
    os << ',';
    if (r.armijo_rhs) os << format_double(*r.armijo_rhs);
    os << '\n';
  }
}

std::vector<StepRecord> read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("trajectory CSV is empty");
  const auto header = split(line, ',');
  if (header.size() < 7 || header.front() != "n") {
    throw std::invalid_argument("trajectory CSV has an unexpected header");
  }
  const std::size_t k = header.size() - 6;
  for (std::size_t i = 0; i < k; ++i) {
    if (header[1 + i] != "x_" + std::to_string(i)) {
      throw std::invalid_argument("trajectory CSV has an unexpected header");
    }
  }

  std::vector<StepRecord> records;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) {
      throw std::invalid_argument("trajectory CSV row has " + std::to_string(cells.size()) +
                                  " cells, expected " + std::to_string(header.size()));
    }
    StepRecord r;
    long long n = 0;
    const auto [ptr, ec] = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), n);
    if (ec != std::errc() || ptr != cells[0].data() + cells[0].size()) {
      throw std::invalid_argument("malformed step index '" + cells[0] + "'");
    }
    r.n = n;
    r.x.resize(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) r.x(static_cast<Eigen::Index>(i)) = parse_double(cells[1 + i]);
    r.f_value = parse_double(cells[1 + k]);
    r.grad_norm = parse_double(cells[2 + k]);
    r.delta = parse_double(cells[3 + k]);
    if (!cells[4 + k].empty()) r.armijo_lhs = parse_double(cells[4 + k]);
    if (!cells[5 + k].empty()) r.armijo_rhs = parse_double(cells[5 + k]);
    records.push_back(std::move(r));
  }
  return records;
}

nlohmann::json trajectory_to_json(const Trajectory& t) {
  nlohmann::json j;
  j["termination"] = to_string(t.termination);
  j["steps"] = t.steps;
  j["max_delta"] = t.max_delta;
  j["growth_limit_hits"] = t.growth_limit_hits;
  j["final_point"] = point_to_json(t.final_point);
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : t.records) {
    recs.push_back({{"n", r.n},
                    {"x", point_to_json(r.x)},
                    {"f", r.f_value},
                    {"grad", point_to_json(r.grad)},
                    {"grad_norm", r.grad_norm},
                    {"delta", r.delta},
                    {"armijo_lhs", optional_number(r.armijo_lhs)},
                    {"armijo_rhs", optional_number(r.armijo_rhs)}});
  }
  j["records"] = std::move(recs);
  return j;
}

Trajectory trajectory_from_json(const nlohmann::json& j) {
  Trajectory t;
  t.termination = termination_from_string(j.at("termination").get<std::string>());
  t.steps = j.at("steps").get<long long>();
  t.max_delta = j.value("max_delta", 0.0);
  t.growth_limit_hits = j.value("growth_limit_hits", 0LL);
  t.final_point = point_from_json(j.at("final_point"));
  for (const auto& rj : j.at("records")) {
    StepRecord r;
    r.n = rj.at("n").get<long long>();
    r.x = point_from_json(rj.at("x"));
    r.f_value = rj.at("f").get<double>();
    if (rj.contains("grad")) r.grad = point_from_json(rj.at("grad"));
    r.grad_norm = rj.at("grad_norm").get<double>();
    r.delta = rj.at("delta").get<double>();
    r.armijo_lhs = optional_number(rj, "armijo_lhs");
    r.armijo_rhs = optional_number(rj, "armijo_rhs");
    t.records.push_back(std::move(r));
  }
  return t;
}

nlohmann::json summary_to_json(const RunSummary& s) {
  nlohmann::json j;
  j["function"] = s.function;
  j["optimizer"] = s.optimizer;
  j["alpha"] = s.alpha;
  j["beta"] = s.beta;
  j["delta0"] = s.delta0;
  j["cap"] = s.cap;
  j["x0"] = point_to_json(s.x0);
  j["max_iters"] = s.max_iters;
  j["grad_tol"] = s.grad_tol;
  j["thin"] = s.thin;
  j["seed"] = s.seed;
  j["steps"] = s.steps;
  j["termination"] = s.termination;
  j["final_point"] = point_to_json(s.final_point);
  j["final_delta"] = optional_number(s.final_delta);
  j["max_delta"] = s.max_delta;
  j["growth_limit_hits"] = s.growth_limit_hits;
  j["error"] = s.error ? nlohmann::json(*s.error) : nlohmann::json(nullptr);
  return j;
}

RunSummary summary_from_json(const nlohmann::json& j) {
  RunSummary s;
  s.function = j.at("function").get<std::string>();
  s.optimizer = j.at("optimizer").get<std::string>();
  s.alpha = j.at("alpha").get<double>();
  s.beta = j.at("beta").get<double>();
  s.delta0 = j.at("delta0").get<double>();
  s.cap = j.at("cap").get<std::string>();
  s.x0 = point_from_json(j.at("x0"));
  s.max_iters = j.at("max_iters").get<long long>();
  s.grad_tol = j.at("grad_tol").get<double>();
  s.thin = j.at("thin").get<long long>();
  s.seed = j.at("seed").get<unsigned long long>();
  s.steps = j.at("steps").get<long long>();
  s.termination = j.at("termination").get<std::string>();
  s.final_point = point_from_json(j.at("final_point"));
  s.final_delta = optional_number(j, "final_delta");
  s.max_delta = j.value("max_delta", 0.0);
  s.growth_limit_hits = j.value("growth_limit_hits", 0LL);
  if (j.contains("error") && !j.at("error").is_null()) s.error = j.at("error").get<std::string>();
  return s;
}

}  // namespace armijo::io
