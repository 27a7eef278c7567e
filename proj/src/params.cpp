#include "ramsey/params.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "ramsey/error.hpp"

namespace ramsey {

double invert_all_present_probability(double p, std::int64_t edges_per_unit) {
  require(p >= 0.0 && p <= 1.0, ErrorCode::parameter_infeasible,
          "probability outside [0,1]");
  require(edges_per_unit >= 1, ErrorCode::invalid_argument, "unit needs edges");
  // Solve p = 1 - (1 - x)^m for x, via log1p/expm1 for accuracy at small p.
  return -std::expm1(std::log1p(-p) / static_cast<double>(edges_per_unit));
}

double union_probability(double per_layer, int layers) {
  require(per_layer >= 0.0 && per_layer <= 1.0, ErrorCode::parameter_infeasible,
          "probability outside [0,1]");
  require(layers >= 0, ErrorCode::invalid_argument, "negative layer count");
  return -std::expm1(static_cast<double>(layers) * std::log1p(-per_layer));
}

namespace {

void check_unit(double value, const std::string& name) {
  if (!(value >= 0.0 && value <= 1.0))
    fail(ErrorCode::parameter_infeasible,
         "parameter-infeasible: " + name + " = " + std::to_string(value));
}

}  // namespace

void derive_probabilities(ParameterSet& params) {
  require(params.n >= 2, ErrorCode::invalid_argument, "n too small");
  require(params.delta > 0.0 && params.delta < 0.5, ErrorCode::parameter_infeasible,
          "delta must lie in (0, 1/2)");
  require(params.C >= 2, ErrorCode::invalid_argument, "C must be >= 2");
  double n = static_cast<double>(params.n);
  params.p = std::pow(n, params.delta - 0.5);
  check_unit(params.p, "p");
  std::int64_t pairs_per_block =
      static_cast<std::int64_t>(params.C) * (params.C - 1) / 2;
  params.p_tilde = invert_all_present_probability(params.p, pairs_per_block);
  check_unit(params.p_tilde, "p_tilde");
  params.p_prime = std::log(n) / n;
  check_unit(params.p_prime, "p_prime");
  params.p_tilde_prime = invert_all_present_probability(
      params.p_prime, static_cast<std::int64_t>(params.C) * params.C);
  check_unit(params.p_tilde_prime, "p_tilde_prime");
  params.p_dprime = union_probability(params.p_prime, params.z);
  check_unit(params.p_dprime, "p_dprime");
  params.p_tilde_dprime = union_probability(params.p_tilde_prime, params.z);
  check_unit(params.p_tilde_dprime, "p_tilde_dprime");
}

ParameterReport validate_parameters(const ParameterSet& params) {
  ParameterReport report;
  report.delta_ell_threshold = 1.0 / (4.0 * params.ell - 6.0);
  report.delta_ell_ok = params.delta > report.delta_ell_threshold;

  auto link = [&](const std::string& big_name, double big, const std::string& small_name,
                  double small) {
    double ratio = small > 0.0 ? big / small : std::numeric_limits<double>::infinity();
    report.chain.push_back({big_name, small_name, ratio, ratio >= params.chain_ratio});
  };
  // {eta^-1, c^-1} >> C >> T3 >> eps3^-1 >> C' >> T2 >> eps2^-1 >> T1 >>
  // eps1^-1 >> ell >> delta^-1.
  link("eta^-1", 1.0 / params.eta, "C", params.C);
  link("c^-1", 1.0 / params.c, "C", params.C);
  link("C", params.C, "T3", params.T3);
  link("T3", params.T3, "eps3^-1", 1.0 / params.eps3);
  link("eps3^-1", 1.0 / params.eps3, "C'", params.C_prime);
  link("C'", params.C_prime, "T2", params.T2);
  link("T2", params.T2, "eps2^-1", 1.0 / params.eps2);
  link("eps2^-1", 1.0 / params.eps2, "T1", params.T1);
  link("T1", params.T1, "eps1^-1", 1.0 / params.eps1);
  link("eps1^-1", 1.0 / params.eps1, "ell", params.ell);
  link("ell", params.ell, "delta^-1", 1.0 / params.delta);
  report.chain_ok = true;
  for (const auto& l : report.chain) report.chain_ok = report.chain_ok && l.pass;
  if (!report.chain_ok)
    report.notes.push_back(
        "separation chain audited at ratio " + std::to_string(params.chain_ratio) +
        "; failures are expected at desk scale");

  auto close = [](double a, double b) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) <= 1e-12 * scale;
  };
  double n = static_cast<double>(params.n);
  std::int64_t pairs_per_block =
      static_cast<std::int64_t>(params.C) * (params.C - 1) / 2;
  bool consistent = params.p > 0.0;
  consistent = consistent && close(params.p, std::pow(n, params.delta - 0.5));
  consistent = consistent &&
               close(params.p, -std::expm1(static_cast<double>(pairs_per_block) *
                                           std::log1p(-params.p_tilde)));
  consistent =
      consistent && close(params.p_prime,
                          -std::expm1(static_cast<double>(params.C) * params.C *
                                      std::log1p(-params.p_tilde_prime)));
  consistent = consistent && close(params.p_dprime, union_probability(params.p_prime, params.z));
  consistent = consistent &&
               close(params.p_tilde_dprime, union_probability(params.p_tilde_prime, params.z));
  report.probabilities_consistent = consistent;
  if (!consistent)
    report.notes.push_back("probability fields do not satisfy their defining equations; "
                           "run derive_probabilities");
  return report;
}

namespace {

struct Field {
  enum Kind { integer, real } kind;
  void* ptr;
};

std::map<std::string, Field> field_table(ParameterSet& p) {
  return {
      {"n", {Field::integer, &p.n}},
      {"delta", {Field::real, &p.delta}},
      {"C", {Field::integer, &p.C}},
      {"C_prime", {Field::integer, &p.C_prime}},
      {"ell", {Field::integer, &p.ell}},
      {"eta", {Field::real, &p.eta}},
      {"c", {Field::real, &p.c}},
      {"eps1", {Field::real, &p.eps1}},
      {"eps2", {Field::real, &p.eps2}},
      {"eps3", {Field::real, &p.eps3}},
      {"T1", {Field::integer, &p.T1}},
      {"T2", {Field::integer, &p.T2}},
      {"T3", {Field::integer, &p.T3}},
      {"q", {Field::integer, &p.q}},
      {"s", {Field::integer, &p.s}},
      {"mu", {Field::real, &p.mu}},
      {"tau", {Field::real, &p.tau}},
      {"gamma", {Field::real, &p.gamma}},
      {"rho", {Field::real, &p.rho}},
      {"alpha", {Field::real, &p.alpha}},
      {"p", {Field::real, &p.p}},
      {"p_tilde", {Field::real, &p.p_tilde}},
      {"p_prime", {Field::real, &p.p_prime}},
      {"p_tilde_prime", {Field::real, &p.p_tilde_prime}},
      {"p_dprime", {Field::real, &p.p_dprime}},
      {"p_tilde_dprime", {Field::real, &p.p_tilde_dprime}},
      {"z", {Field::integer, &p.z}},
      {"regular_set_count", {Field::integer, &p.regular_set_count}},
      {"chain_ratio", {Field::real, &p.chain_ratio}},
  };
}

}  // namespace

ParameterSet parse_parameters(const std::string& text) {
  ParameterSet params;
  auto table = field_table(params);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!line.empty() && is_space(line.front())) line.erase(line.begin());
    while (!line.empty() && is_space(line.back())) line.pop_back();
    if (line.empty()) continue;
    auto eq = line.find('=');
    require(eq != std::string::npos, ErrorCode::io_failure,
            "parameter file line " + std::to_string(line_no) + " is not key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    while (!key.empty() && is_space(key.back())) key.pop_back();
    while (!value.empty() && is_space(value.front())) value.erase(value.begin());
    auto it = table.find(key);
    require(it != table.end(), ErrorCode::io_failure,
            "unknown parameter key '" + key + "'");
    try {
      if (it->second.kind == Field::integer) {
        long long v = std::stoll(value);
        if (key == "n")
          *static_cast<Vertex*>(it->second.ptr) = static_cast<Vertex>(v);
        else
          *static_cast<int*>(it->second.ptr) = static_cast<int>(v);
      } else {
        *static_cast<double*>(it->second.ptr) = std::stod(value);
      }
    } catch (const std::exception&) {
      fail(ErrorCode::io_failure, "bad value for parameter '" + key + "'");
    }
  }
  return params;
}

std::string serialize_parameters(const ParameterSet& params) {
  ParameterSet copy = params;
  auto table = field_table(copy);
  // Fixed emission order (the map is keyed alphabetically, which is fine and
  // deterministic, but listing explicitly keeps the file readable).
  static const char* order[] = {
      "n", "delta", "C", "C_prime", "ell", "eta", "c",
      "eps1", "eps2", "eps3", "T1", "T2", "T3", "q", "s",
      "mu", "tau", "gamma", "rho", "alpha",
      "p", "p_tilde", "p_prime", "p_tilde_prime", "p_dprime", "p_tilde_dprime",
      "z", "regular_set_count", "chain_ratio"};
  std::ostringstream out;
  out.precision(17);
  for (const char* key : order) {
    const auto& field = table.at(key);
    out << key << "=";
    if (field.kind == Field::integer) {
      if (std::string(key) == "n")
        out << *static_cast<const Vertex*>(field.ptr);
      else
        out << *static_cast<const int*>(field.ptr);
    } else {
      out << *static_cast<const double*>(field.ptr);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ramsey
