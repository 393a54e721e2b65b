#include "brieskorn/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "brieskorn/errors.hpp"
#include "brieskorn/numtheory.hpp"

namespace brieskorn {

PuiseuxBranch::PuiseuxBranch(std::vector<PuiseuxTerm> terms) : terms_(std::move(terms)) {
  mpq_class prev = 0;
  mpz_class ram = 1;
  for (const PuiseuxTerm& t : terms_) {
    if (t.exp_den < 1) throw input_error("branch term: exponent denominator must be >= 1");
    if (t.exp_num < 1) throw input_error("branch term: exponents must be positive");
    if (t.coefficient == 0) throw input_error("branch term: coefficients must be nonzero");
    mpq_class e(mpz_class(static_cast<long>(t.exp_num)),
                mpz_class(static_cast<long>(t.exp_den)));
    e.canonicalize();
    if (e <= prev)
      throw input_error("branch terms: exponents must be strictly increasing");
    prev = e;
    mpz_class den = static_cast<long>(t.exp_den);
    mpz_lcm(ram.get_mpz_t(), ram.get_mpz_t(), den.get_mpz_t());
  }
  if (!fits_uint64(ram)) throw input_error("branch: common denominator out of range");
  ramification_ = to_uint64(ram);
}

CharacteristicPairs::CharacteristicPairs(std::vector<CharacteristicPair> pairs)
    : pairs_(std::move(pairs)) {
  std::int64_t prev_q = 0;
  for (const CharacteristicPair& pq : pairs_) {
    if (pq.p < 2) throw input_error("characteristic pair: p must be >= 2");
    if (pq.q < 1) throw input_error("characteristic pair: q must be >= 1");
    if (std::gcd(pq.p, pq.q) != 1)
      throw input_error("characteristic pair: p and q must be coprime");
    // q_k / (p_1..p_k) strictly above the previous essential exponent.
    if (!(static_cast<__int128>(pq.q) > static_cast<__int128>(pq.p) * prev_q))
      throw input_error("characteristic pairs: essential exponents must increase");
    prev_q = pq.q;
  }
}

CharacteristicPairs characteristic_pairs(const PuiseuxBranch& branch) {
  const std::uint64_t m = branch.ramification();
  std::uint64_t running = m;
  std::vector<CharacteristicPair> pairs;
  for (const PuiseuxTerm& t : branch.terms()) {
    // Exponent numerator over the common denominator m.
    const mpz_class num =
        mpz_class(static_cast<long>(t.exp_num)) *
        static_cast<unsigned long>(m / static_cast<std::uint64_t>(t.exp_den));
    if (running == 1) continue;
    mpz_class g_z;
    mpz_class run_z = static_cast<unsigned long>(running);
    mpz_gcd(g_z.get_mpz_t(), run_z.get_mpz_t(), num.get_mpz_t());
    const std::uint64_t g = to_uint64(g_z);
    if (g == running) continue;
    const mpz_class q = num / g_z;
    if (!fits_uint64(q) || to_uint64(q) > static_cast<std::uint64_t>(INT64_MAX))
      throw input_error("characteristic pair out of range");
    pairs.push_back({static_cast<std::int64_t>(running / g),
                     static_cast<std::int64_t>(to_uint64(q))});
    running = g;
  }
  if (running != 1)
    throw input_error(
        "truncation not certified: exponent denominators are not exhausted by the "
        "given terms (common denominator " +
        std::to_string(m) + " leaves gcd " + std::to_string(running) + ")");
  return CharacteristicPairs(std::move(pairs));
}

CablePresentation cable_presentation(const CharacteristicPairs& cp) {
  CablePresentation out;
  __int128 prev_s = 0;
  __int128 prev_p = 0;
  __int128 prev_q = 0;
  for (const CharacteristicPair& pq : cp.pairs()) {
    // Slope against the Seifert framing of the previous companion; stage
    // one is the plain torus knot.
    __int128 s = out.stages.empty()
                     ? static_cast<__int128>(pq.q)
                     : pq.q + pq.p * (prev_p * prev_s - prev_q);
    if (s > INT64_MAX || s < 1)
      throw input_error("cable presentation: slope out of range");
    out.stages.push_back({pq.p, static_cast<std::int64_t>(s)});
    prev_s = s;
    prev_p = pq.p;
    prev_q = pq.q;
  }
  return out;
}

mpz_class branch_milnor_number(const CharacteristicPairs& cp) {
  if (cp.empty()) return 0;

  // Value-semigroup generators by the classical recursion on the essential
  // exponents: vbar_{k+1} = p_k vbar_k + beta_{k+1} - beta_k with beta_k
  // the numerators over m = p_1 ... p_g.
  mpz_class m = 1;
  for (const auto& pq : cp.pairs()) m *= static_cast<long>(pq.p);
  std::vector<mpz_class> beta;
  {
    mpz_class head = m;
    for (const auto& pq : cp.pairs()) {
      head /= static_cast<long>(pq.p);  // m / (p_1 ... p_k)
      beta.push_back(head * static_cast<long>(pq.q));
    }
  }
  std::vector<mpz_class> vbar{beta[0]};
  for (std::size_t k = 1; k < beta.size(); ++k)
    vbar.push_back(static_cast<long>(cp.pairs()[k - 1].p) * vbar[k - 1] +
                   beta[k] - beta[k - 1]);

  mpz_class conductor = 1 - m;
  for (std::size_t k = 0; k < vbar.size(); ++k)
    conductor += static_cast<long>(cp.pairs()[k].p - 1) * vbar[k];

  if (conductor < 0) throw internal_error("negative semigroup conductor");

  // Certify by sieving the semigroup: the gap count must be half the
  // conductor (branch semigroups are symmetric).
  if (!fits_uint64(conductor) || to_uint64(conductor) > (std::uint64_t{1} << 24))
    throw budget_error("branch Milnor number: conductor too large to certify");
  const std::uint64_t c = to_uint64(conductor);
  if (c == 0) return 0;
  std::vector<char> rep(c + 1, 0);
  rep[0] = 1;
  std::vector<std::uint64_t> gens{to_uint64(m)};
  for (const mpz_class& v : vbar) gens.push_back(to_uint64(v));
  for (std::uint64_t g : gens) {
    if (g == 0) throw internal_error("zero semigroup generator");
    for (std::uint64_t i = g; i <= c; ++i) rep[i] |= rep[i - g];
  }
  std::uint64_t gaps = 0;
  for (std::uint64_t i = 0; i < c; ++i)
    if (!rep[i]) ++gaps;
  if (rep[c - 1])
    throw internal_error("semigroup conductor mismatch (Frobenius element representable)");
  if (2 * gaps != c)
    throw internal_error("branch semigroup is not symmetric; pair data inconsistent");
  return conductor;
}

void BivariatePolynomial::add_term(std::uint32_t dx, std::uint32_t dy, mpz_class c) {
  if (c == 0) return;
  const Key key{dx, dy};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class BivariatePolynomial::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::uint64_t parse_number(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i) throw input_error("polynomial parse: expected a number in '" + s + "'");
  return std::stoull(s.substr(start, i - start));
}

}  // namespace

BivariatePolynomial BivariatePolynomial::parse_expression(const std::string& text) {
  BivariatePolynomial out;
  std::size_t i = 0;
  skip_ws(text, i);
  if (i == text.size()) throw input_error("polynomial parse: empty expression");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws(text, i);
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw input_error("polynomial parse: expected '+' or '-' in '" + text + "'");
    }
    first = false;
    skip_ws(text, i);
    mpz_class coeff = 1;
    bool have_any = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = static_cast<unsigned long>(parse_number(text, i));
      have_any = true;
    }
    std::uint32_t dx = 0, dy = 0;
    while (true) {
      skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws(text, i);
      }
      if (i < text.size() && (text[i] == 'x' || text[i] == 'y')) {
        const char var = text[i++];
        std::uint64_t e = 1;
        skip_ws(text, i);
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws(text, i);
          e = parse_number(text, i);
        }
        if (e > UINT32_MAX) throw input_error("polynomial parse: exponent too large");
        (var == 'x' ? dx : dy) += static_cast<std::uint32_t>(e);
        have_any = true;
      } else {
        break;
      }
    }
    if (!have_any)
      throw input_error("polynomial parse: expected a monomial in '" + text + "'");
    out.add_term(dx, dy, sign * coeff);
    skip_ws(text, i);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::parse_term_list(const std::string& text) {
  BivariatePolynomial out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string coeff;
    if (!(ls >> coeff)) continue;
    std::uint32_t dx = 0, dy = 0;
    if (!(ls >> dx >> dy))
      throw input_error("polynomial term list: expected 'coeff deg_x deg_y'");
    std::string extra;
    if (ls >> extra) throw input_error("polynomial term list: trailing tokens");
    out.add_term(dx, dy, mpz_class(coeff));
  }
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first reads naturally.
  std::vector<std::pair<Key, mpz_class>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const auto ta = a.first.first + a.first.second;
    const auto tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  for (const auto& [key, c] : sorted) {
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    const bool unit = mag == 1 && (key.first || key.second);
    if (!unit) out << mag.get_str();
    if (key.first) {
      out << "x";
      if (key.first > 1) out << "^" << key.first;
    }
    if (key.second) {
      out << "y";
      if (key.second > 1) out << "^" << key.second;
    }
  }
  return out.str();
}

namespace {

// y(t)^j truncated below `bound`, built by repeated truncated products.
std::vector<mpq_class> truncated_power(const std::vector<mpq_class>& base,
                                       std::uint32_t j, std::uint64_t bound) {
  std::vector<mpq_class> acc(1, mpq_class(1));
  for (std::uint32_t step = 0; step < j; ++step) {
    std::vector<mpq_class> next(std::min<std::uint64_t>(bound, acc.size() + base.size()),
                                mpq_class(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t k = 0; k < base.size() && i + k < next.size(); ++k) {
        if (base[k] == 0) continue;
        next[i + k] += acc[i] * base[k];
      }
    }
    acc = std::move(next);
  }
  acc.resize(std::min<std::uint64_t>(bound, acc.size()));
  return acc;
}

}  // namespace

mpz_class intersection_multiplicity(const PuiseuxBranch& branch,
                                    const BivariatePolynomial& f,
                                    const IntersectionOptions& opts) {
  if (f.is_zero()) throw input_error("intersection: the zero polynomial vanishes on every branch");
  if (f.constant_term() != 0)
    throw input_error("intersection: polynomial does not vanish at the origin");

  const std::uint64_t m = branch.ramification();

  // y(t): exponent e*m in t for each branch term.
  std::vector<std::pair<mpz_class, mpq_class>> y_terms;
  mpz_class y_degree = 0;
  for (const PuiseuxTerm& t : branch.terms()) {
    const mpz_class idx = mpz_class(static_cast<long>(t.exp_num)) *
                          static_cast<unsigned long>(m / static_cast<std::uint64_t>(t.exp_den));
    y_terms.emplace_back(idx, t.coefficient);
    y_degree = std::max(y_degree, idx);
  }

  // Degree bound for f(t^m, y(t)): truncation past it certifies identical
  // vanishing.
  mpz_class d_max = 0;
  std::uint32_t max_j = 0;
  for (const auto& [key, c] : f.terms()) {
    const mpz_class deg = mpz_class(static_cast<unsigned long>(m)) * key.first +
                          y_degree * key.second;
    d_max = std::max(d_max, deg);
    max_j = std::max(max_j, key.second);
  }

  std::uint64_t bound = std::max<std::uint64_t>(opts.initial_bound, 2);
  while (true) {
    std::vector<mpq_class> y(bound, mpq_class(0));
    for (const auto& [idx, c] : y_terms)
      if (fits_uint64(idx) && to_uint64(idx) < bound) y[to_uint64(idx)] += c;

    // Powers of y once each; x^i is the exact shift by m*i.
    std::vector<std::vector<mpq_class>> y_pow(max_j + 1);
    for (std::uint32_t j = 0; j <= max_j; ++j) y_pow[j] = truncated_power(y, j, bound);

    std::vector<mpq_class> series(bound, mpq_class(0));
    for (const auto& [key, c] : f.terms()) {
      const mpz_class shift_z = mpz_class(static_cast<unsigned long>(m)) * key.first;
      if (!fits_uint64(shift_z) || to_uint64(shift_z) >= bound) continue;
      const std::uint64_t shift = to_uint64(shift_z);
      const auto& pw = y_pow[key.second];
      for (std::size_t i = 0; i + shift < bound && i < pw.size(); ++i) {
        if (pw[i] == 0) continue;
        series[i + shift] += mpq_class(c) * pw[i];
      }
    }

    for (std::uint64_t i = 0; i < bound; ++i)
      if (series[i] != 0) return mpz_class(static_cast<unsigned long>(i));

    if (mpz_class(static_cast<unsigned long>(bound)) > d_max)
      throw input_error("intersection: polynomial vanishes identically on the branch (same branch)");
    if (bound >= opts.hard_cap)
      throw input_error("intersection: order exceeds the truncation cap of " +
                        std::to_string(opts.hard_cap));
    bound = std::min(bound * 2, opts.hard_cap);
  }
}

}  // namespace brieskorn
