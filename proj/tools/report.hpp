#pragma once

#include <gmpxx.h>

#include <string>

#include <json.hpp>

#include "brieskorn/polynomial.hpp"

namespace brieskorn::cli {

using ordered_json = nlohmann::ordered_json;

// One result document per invocation: request echo, exact results, and
// provenance notes.  JSON output is byte-stable for identical inputs;
// plain output is the same document flattened to `key: value` lines.
class Report {
 public:
  explicit Report(const std::string& command);

  ordered_json& request() { return doc_["request"]; }
  ordered_json& results() { return doc_["results"]; }
  void note(const std::string& text);

  std::string to_json() const;
  std::string to_plain() const;

 private:
  ordered_json doc_;
};

std::string str(const mpz_class& z);
std::string str(const mpq_class& q);
ordered_json polynomial_json(const IntegerPolynomial& p, std::size_t dense_limit = 256);

}  // namespace brieskorn::cli
