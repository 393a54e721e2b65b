#include "report.hpp"

#include <sstream>

namespace brieskorn::cli {

Report::Report(const std::string& command) {
  doc_["tool"] = "brieskorn";
  doc_["command"] = command;
  doc_["request"] = ordered_json::object();
  doc_["status"] = "ok";
  doc_["results"] = ordered_json::object();
  doc_["notes"] = ordered_json::array();
}

void Report::note(const std::string& text) { doc_["notes"].push_back(text); }

std::string Report::to_json() const { return doc_.dump(2) + "\n"; }

namespace {

bool scalar_array(const ordered_json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const ordered_json& v, const std::string& prefix, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (scalar_array(v)) {
    out << prefix << ":";
    for (const auto& e : v) out << " " << scalar_text(e);
    out << "\n";
  } else if (v.is_array()) {
    std::size_t i = 0;
    for (const auto& e : v) flatten(e, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out << prefix << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string Report::to_plain() const {
  std::ostringstream out;
  flatten(doc_, "", out);
  return out.str();
}

std::string str(const mpz_class& z) { return z.get_str(); }

std::string str(const mpq_class& q) { return q.get_str(); }

ordered_json polynomial_json(const IntegerPolynomial& p, std::size_t dense_limit) {
  ordered_json out;
  out["degree"] = p.degree();
  if (p.degree() >= 0 && static_cast<std::size_t>(p.degree()) <= dense_limit) {
    ordered_json coeffs = ordered_json::array();
    for (const mpz_class& c : p.coefficients()) coeffs.push_back(str(c));
    out["coefficients"] = std::move(coeffs);
    out["text"] = p.to_string();
  } else {
    out["coefficients_omitted"] = "degree above the rendering limit";
  }
  return out;
}

}  // namespace brieskorn::cli
