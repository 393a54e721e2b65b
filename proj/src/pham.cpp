#include "brieskorn/pham.hpp"

#include <numeric>
#include <vector>

#include "brieskorn/errors.hpp"

namespace brieskorn {

mpz_class milnor_number(const Exponents& a) {
  mpz_class mu = 1;
  for (std::int64_t ai : a.values()) mu *= static_cast<long>(ai - 1);
  return mu;
}

std::int64_t link_connectivity(const Exponents& a) { return a.n() - 2; }

int picard_lefschetz_self_intersection(std::int64_t n) {
  if (n < 1) throw input_error("picard_lefschetz_self_intersection: n must be >= 1");
  switch (n % 4) {
    case 0:
      return 2;
    case 2:
      return -2;
    default:
      return 0;
  }
}

bool is_homotopy_sphere(const Exponents& a) {
  if (a.n() < 3)
    throw input_error("is_homotopy_sphere: requires n >= 3 (at least four exponents)");
  const auto& v = a.values();
  const std::size_t m = v.size();

  // Union-find over the gcd graph.
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::gcd(v[i], v[j]) > 1) parent[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> components(m);
  for (std::size_t i = 0; i < m; ++i) components[find(i)].push_back(i);

  std::size_t isolated = 0;
  bool has_odd_gcd2_component = false;
  for (const auto& comp : components) {
    if (comp.size() == 1) {
      ++isolated;
    } else if (comp.size() >= 3 && comp.size() % 2 == 1) {
      bool all_two = true;
      for (std::size_t x = 0; x < comp.size() && all_two; ++x)
        for (std::size_t y = x + 1; y < comp.size() && all_two; ++y)
          if (std::gcd(v[comp[x]], v[comp[y]]) != 2) all_two = false;
      if (all_two) has_odd_gcd2_component = true;
    }
  }
  if (isolated >= 2) return true;
  return isolated == 1 && has_odd_gcd2_component;
}

CyclotomicFactorization factorization_from_spectrum(const MonodromySpectrum& spec) {
  // Exact-order eigenvalue counts.
  std::map<std::uint64_t, mpz_class> order_count;
  for (const auto& [rot, mult] : spec.entries) order_count[rot.den] += mult;

  CyclotomicFactorization fact;
  for (const auto& [d, count] : order_count) {
    // Moebius inversion of the order-divides-d totals recovers the exact-
    // order count; it must reproduce what we tallied.
    mpz_class inverted = 0;
    for (std::uint64_t e : divisors(d)) {
      mpz_class t_e = 0;
      for (std::uint64_t f : divisors(e)) {
        auto it = order_count.find(f);
        if (it != order_count.end()) t_e += it->second;
      }
      inverted += static_cast<long>(moebius(d / e)) * t_e;
    }
    if (inverted != count)
      throw internal_error("eigenvalue order counts fail Moebius inversion");

    const mpz_class phi = static_cast<unsigned long>(totient(d));
    mpz_class m_d, rem;
    mpz_fdiv_qr(m_d.get_mpz_t(), rem.get_mpz_t(), count.get_mpz_t(), phi.get_mpz_t());
    if (rem != 0 || m_d < 0)
      throw internal_error("eigenvalue counts are not a cyclotomic multiple for order " +
                           std::to_string(d));
    fact.multiplicity[d] = m_d;
  }

  // Galois-orbit check: every primitive residue of order d occurs with the
  // same multiplicity m_d.
  std::map<std::uint64_t, std::uint64_t> seen;
  for (const auto& [rot, mult] : spec.entries) {
    if (mult != fact.multiplicity.at(rot.den))
      throw internal_error("spectrum multiplicities are not Galois-invariant");
    ++seen[rot.den];
  }
  for (const auto& [d, residues] : seen)
    if (residues != totient(d))
      throw internal_error("spectrum is missing primitive residues of order " +
                           std::to_string(d));
  return fact;
}

CyclotomicFactorization characteristic_factorization(const Exponents& a,
                                                     const EnumerationOptions& opts) {
  const MonodromySpectrum spec = monodromy_spectrum(a, opts);
  if (spec.total != milnor_number(a))
    throw internal_error("spectrum size differs from the Milnor number");
  CyclotomicFactorization fact = factorization_from_spectrum(spec);
  if (fact.degree() != spec.total)
    throw internal_error("cyclotomic factorization degree mismatch");
  return fact;
}

IntegerPolynomial characteristic_polynomial(const Exponents& a,
                                            const EnumerationOptions& opts) {
  return characteristic_factorization(a, opts).expand(opts.budget);
}

SignatureParts signature_parts(const Exponents& a, const EnumerationOptions& opts) {
  if (a.n() % 2 != 0 || a.n() < 2)
    throw input_error("signature: requires even n >= 2 (odd number of exponents >= 3)");
  const SumDistribution dist = sum_distribution(a, opts);
  const std::uint64_t big_l = dist.modulus / 2;
  SignatureParts parts;
  for (const auto& [r, c] : dist.counts) {
    if (r == 0 || r == big_l)
      parts.zero += c;
    else if (r < big_l)
      parts.positive += c;
    else
      parts.negative += c;
  }
  if (parts.positive + parts.negative + parts.zero != milnor_number(a))
    throw internal_error("signature parts do not partition the Milnor number");
  return parts;
}

mpz_class signature(const Exponents& a, const EnumerationOptions& opts) {
  return signature_parts(a, opts).value();
}

const char* SphereClass::kind_name(Kind k) {
  switch (k) {
    case Kind::kNotHomotopySphere:
      return "not_homotopy_sphere";
    case Kind::kStandardSphere:
      return "standard_sphere";
    case Kind::kKervaireSphere:
      return "kervaire_sphere";
    case Kind::kBPClass:
      return "bp_class";
    case Kind::kUnknownOddDim:
      return "unclassified";
  }
  return "unclassified";
}

SphereClass sphere_class(const Exponents& a, const EnumerationOptions& opts) {
  if (a.n() < 3) throw input_error("sphere_class: requires n >= 3");
  SphereClass out;
  if (!is_homotopy_sphere(a)) {
    out.kind = SphereClass::Kind::kNotHomotopySphere;
    out.detail = "gcd-graph criterion fails";
    return out;
  }
  if (a.n() % 2 == 0) {
    const mpz_class sig = signature(a, opts);
    mpz_class k, rem;
    mpz_tdiv_qr(k.get_mpz_t(), rem.get_mpz_t(), sig.get_mpz_t(),
                mpz_class(8).get_mpz_t());
    if (rem != 0)
      throw internal_error("homotopy-sphere signature not divisible by 8");
    out.kind = SphereClass::Kind::kBPClass;
    out.bp_multiple = k;
    out.detail = "signature/8 multiples of the generator";
    if (a.n() == 4) {
      const mpz_class r28 = ((k % 28) + 28) % 28;
      out.bp_mod28 = static_cast<std::uint32_t>(r28.get_ui());
      out.detail += "; reduced mod 28";
    }
  } else {
    const CyclotomicFactorization fact = characteristic_factorization(a, opts);
    const std::uint32_t residue = fact.mod8_at_minus_one();
    out.arf_residue = residue;
    if (residue % 2 == 0)
      throw internal_error("Alexander value at -1 is even for a homotopy sphere");
    if (residue == 1 || residue == 7) {
      out.kind = SphereClass::Kind::kStandardSphere;
      out.detail = "Alexander value at -1 is +-1 mod 8";
    } else {
      out.kind = SphereClass::Kind::kKervaireSphere;
      out.detail = "Alexander value at -1 is +-3 mod 8";
      if (a.n() == 3)
        out.detail += "; in dimension 5 the Kervaire sphere is diffeomorphic to the standard one";
    }
  }
  return out;
}

bool is_homology_3_sphere(const Exponents& a) {
  if (a.count() != 3)
    throw input_error("is_homology_3_sphere: requires exactly three exponents");
  const auto& v = a.values();
  return std::gcd(v[0], v[1]) == 1 && std::gcd(v[0], v[2]) == 1 &&
         std::gcd(v[1], v[2]) == 1;
}

const char* GeometryType::kind_name(Kind k) {
  switch (k) {
    case Kind::kSpherical:
      return "spherical";
    case Kind::kNilpotent:
      return "nilpotent";
    case Kind::kSLTwoTilde:
      return "sl2_tilde";
  }
  return "spherical";
}

GeometryType geometry_type(const Exponents& a) {
  if (a.count() != 3)
    throw input_error("geometry_type: requires exactly three exponents");
  mpq_class sum = 0;
  for (std::int64_t ai : a.values())
    sum += mpq_class(mpz_class(1), mpz_class(static_cast<long>(ai)));
  GeometryType out{GeometryType::Kind::kSpherical, sum};
  if (sum > 1)
    out.kind = GeometryType::Kind::kSpherical;
  else if (sum == 1)
    out.kind = GeometryType::Kind::kNilpotent;
  else
    out.kind = GeometryType::Kind::kSLTwoTilde;
  return out;
}

mpz_class casson_invariant(const Exponents& a, const EnumerationOptions& opts) {
  if (a.count() != 3)
    throw input_error("casson_invariant: requires exactly three exponents");
  if (!is_homology_3_sphere(a))
    throw input_error("casson_invariant: exponents are not pairwise coprime (not a homology sphere)");
  const mpz_class sig = signature(a, opts);
  mpz_class k, rem;
  mpz_tdiv_qr(k.get_mpz_t(), rem.get_mpz_t(), sig.get_mpz_t(),
              mpz_class(8).get_mpz_t());
  if (rem != 0)
    throw internal_error("homology-sphere signature not divisible by 8");
  return k;
}

}  // namespace brieskorn
