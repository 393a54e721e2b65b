#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/pham.hpp"

using namespace brieskorn;

namespace {

// Independent oracle: walk every tuple 0 < k_j < a_j with exact rational
// sums, no shared code with the residue engines.
struct BruteResult {
  std::map<std::pair<std::uint64_t, std::uint64_t>, long> spectrum;  // reduced c/d -> count
  long sig_plus = 0, sig_minus = 0, sig_zero = 0;
  long total = 0;
};

BruteResult brute_force(const std::vector<std::int64_t>& a) {
  BruteResult out;
  std::vector<std::int64_t> k(a.size(), 1);
  while (true) {
    mpq_class sum = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      mpq_class term(mpz_class(static_cast<long>(k[j])),
                     mpz_class(static_cast<long>(a[j])));
      term.canonicalize();
      sum += term;
    }
    // fractional part
    mpz_class ip = sum.get_num() / sum.get_den();
    mpq_class frac = sum - mpq_class(ip);
    CHECK(frac >= 0);
    out.spectrum[{frac.get_num().get_ui(), frac.get_den().get_ui()}] += 1;
    // sum mod 2
    mpq_class mod2 = sum;
    while (mod2 >= 2) mod2 -= 2;
    if (mod2 == 0 || mod2 == 1)
      ++out.sig_zero;
    else if (mod2 < 1)
      ++out.sig_plus;
    else
      ++out.sig_minus;
    ++out.total;

    std::size_t pos = a.size();
    while (pos-- > 0) {
      if (++k[pos] < a[pos]) break;
      k[pos] = 1;
      if (pos == 0) return out;
    }
  }
}

std::vector<std::vector<std::int64_t>> small_corpus() {
  std::vector<std::vector<std::int64_t>> corpus;
  for (std::int64_t a = 2; a <= 5; ++a)
    for (std::int64_t b = 2; b <= 5; ++b) corpus.push_back({a, b});
  for (std::int64_t a = 2; a <= 4; ++a)
    for (std::int64_t b = 2; b <= 4; ++b)
      for (std::int64_t c = 2; c <= 4; ++c) corpus.push_back({a, b, c});
  corpus.push_back({6, 4, 3, 2});
  corpus.push_back({5, 4, 3, 2});
  corpus.push_back({2, 2, 2, 2, 2});
  return corpus;
}

std::string spectrum_text(const MonodromySpectrum& spec) {
  std::ostringstream out;
  for (const auto& [rot, mult] : spec.entries)
    out << rot.num << "/" << rot.den << ":" << mult << ";";
  return out.str();
}

}  // namespace

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(Exponents({5}), input_error);
  CHECK_THROWS_AS(Exponents({1, 2}), input_error);
  CHECK_THROWS_AS(Exponents({3, 0}), input_error);
  CHECK(Exponents({2, 2}).n() == 1);
  CHECK(Exponents({2, 3, 5}).lcm() == 30);
}

TEST_CASE("milnor number") {
  CHECK(milnor_number(Exponents({2, 2, 2})) == 1);
  for (std::int64_t d = 2; d <= 9; ++d)
    CHECK(milnor_number(Exponents({d, 2, 2, 2})) == d - 1);
  CHECK(milnor_number(Exponents({5, 3, 2})) == 8);
  // cross-check by counting basis tuples
  CHECK(brute_force({5, 3, 2}).total == 8);
}

TEST_CASE("monodromy spectrum examples") {
  const MonodromySpectrum s222 = monodromy_spectrum(Exponents({2, 2, 2}));
  REQUIRE(s222.entries.size() == 1);
  CHECK(s222.entries.at(Rotation{1, 2}) == 1);

  const MonodromySpectrum s32 = monodromy_spectrum(Exponents({3, 2}));
  REQUIRE(s32.entries.size() == 2);
  CHECK(s32.entries.at(Rotation{1, 6}) == 1);
  CHECK(s32.entries.at(Rotation{5, 6}) == 1);

  const MonodromySpectrum s22 = monodromy_spectrum(Exponents({2, 2}));
  REQUIRE(s22.entries.size() == 1);
  CHECK(s22.entries.at(Rotation{0, 1}) == 1);
}

TEST_CASE("spectrum and signature match the rational brute force") {
  for (const auto& a : small_corpus()) {
    const BruteResult expect = brute_force(a);
    const MonodromySpectrum spec = monodromy_spectrum(Exponents(a));
    CHECK(spec.total == expect.total);
    REQUIRE(spec.entries.size() == expect.spectrum.size());
    for (const auto& [rot, mult] : spec.entries) {
      auto it = expect.spectrum.find({rot.num, rot.den});
      REQUIRE(it != expect.spectrum.end());
      CHECK(mult == it->second);
    }
    if ((a.size() - 1) % 2 == 0) {
      const SignatureParts parts = signature_parts(Exponents(a));
      CHECK(parts.positive == expect.sig_plus);
      CHECK(parts.negative == expect.sig_minus);
      CHECK(parts.zero == expect.sig_zero);
    }
  }
}

TEST_CASE("spectrum properties: size, conjugation symmetry, lcm denominators") {
  for (const auto& a : small_corpus()) {
    const Exponents e(a);
    const MonodromySpectrum spec = monodromy_spectrum(e);
    CHECK(spec.total == milnor_number(e));
    const mpz_class big_l = e.lcm();
    for (const auto& [rot, mult] : spec.entries) {
      CHECK(big_l % mpz_class(static_cast<unsigned long>(rot.den)) == 0);
      const Rotation conj =
          rot.num == 0 ? rot : Rotation{rot.den - rot.num, rot.den};
      CHECK(spec.entries.at(conj) == mult);
    }
  }
}

TEST_CASE("characteristic polynomial examples") {
  const EnumerationOptions opts;
  CHECK(characteristic_polynomial(Exponents({3, 2}), opts).to_string() == "t^2 - t + 1");
  CHECK(characteristic_polynomial(Exponents({2, 2, 2}), opts).to_string() == "t + 1");
  CHECK(characteristic_polynomial(Exponents({2, 2}), opts).to_string() == "t - 1");
}

TEST_CASE("characteristic polynomial is a monic cyclotomic product of degree mu") {
  for (const auto& a : small_corpus()) {
    const Exponents e(a);
    const CyclotomicFactorization fact = characteristic_factorization(e);
    CHECK(fact.degree() == milnor_number(e));
    const IntegerPolynomial poly = fact.expand(1u << 16);
    CHECK(poly.is_monic());
    CHECK(mpz_class(poly.degree()) == milnor_number(e));
    CHECK(poly.evaluate(1) == fact.value_at_one());
    CHECK(poly.evaluate(-1) == fact.value_at_minus_one());
  }
}

TEST_CASE("connectivity statement") {
  CHECK(link_connectivity(Exponents({2, 2, 2})) == 0);
  CHECK(link_connectivity(Exponents({3, 2, 2, 2})) == 1);
  CHECK(link_connectivity(Exponents({2, 2, 2, 2, 2, 2})) == 3);
}

TEST_CASE("picard-lefschetz self-intersection") {
  CHECK(picard_lefschetz_self_intersection(4) == 2);
  CHECK(picard_lefschetz_self_intersection(2) == -2);
  CHECK(picard_lefschetz_self_intersection(3) == 0);
  CHECK(picard_lefschetz_self_intersection(1) == 0);
  CHECK(picard_lefschetz_self_intersection(8) == 2);
  CHECK_THROWS_AS(picard_lefschetz_self_intersection(0), input_error);
}

TEST_CASE("homotopy sphere criterion") {
  CHECK(is_homotopy_sphere(Exponents({3, 2, 2, 2, 2, 2})));
  CHECK(is_homotopy_sphere(Exponents({3, 2, 2, 2})));
  CHECK(!is_homotopy_sphere(Exponents({6, 3, 2, 2})));
  CHECK(is_homotopy_sphere(Exponents({5, 3, 2, 2, 2})));  // two isolated vertices
  CHECK(!is_homotopy_sphere(Exponents({2, 2, 2, 2, 2})));  // odd gcd-2 component, no isolated vertex
  CHECK(!is_homotopy_sphere(Exponents({4, 4, 4, 3})));     // gcd 4, not 2
  CHECK_THROWS_AS(is_homotopy_sphere(Exponents({5, 3, 2})), input_error);
}

TEST_CASE("signature examples and anchors") {
  CHECK(signature(Exponents({2, 2, 2})) == -1);
  CHECK(signature(Exponents({2, 2, 2, 2, 2})) == 1);
  CHECK(signature(Exponents({5, 3, 2})) == -8);
  CHECK_THROWS_AS(signature(Exponents({2, 2})), input_error);
  CHECK_THROWS_AS(signature(Exponents({2, 2, 2, 2})), input_error);

  // rank-1 anchor: for (2,...,2) with even n the lone tuple contributes
  // half the vanishing-cycle self-intersection
  for (std::int64_t n = 2; n <= 10; n += 2) {
    std::vector<std::int64_t> twos(n + 1, 2);
    CHECK(signature(Exponents(twos)) == picard_lefschetz_self_intersection(n) / 2);
  }
}

TEST_CASE("signature partition property") {
  for (const auto& a : small_corpus()) {
    if ((a.size() - 1) % 2 != 0) continue;
    const Exponents e(a);
    const SignatureParts parts = signature_parts(e);
    CHECK(parts.positive + parts.negative + parts.zero == milnor_number(e));
  }
}

TEST_CASE("sphere classes from the paper families") {
  const SphereClass milnor_gen = sphere_class(Exponents({5, 3, 2, 2, 2}));
  CHECK(milnor_gen.kind == SphereClass::Kind::kBPClass);
  CHECK(*milnor_gen.bp_multiple == 1);
  CHECK(*milnor_gen.bp_mod28 == 1);

  const SphereClass kervaire = sphere_class(Exponents({3, 2, 2, 2, 2, 2}));
  CHECK(kervaire.kind == SphereClass::Kind::kKervaireSphere);

  const SphereClass standard = sphere_class(Exponents({7, 2, 2, 2}));
  CHECK(standard.kind == SphereClass::Kind::kStandardSphere);

  const SphereClass not_hs = sphere_class(Exponents({6, 3, 2, 2}));
  CHECK(not_hs.kind == SphereClass::Kind::kNotHomotopySphere);

  CHECK_THROWS_AS(sphere_class(Exponents({5, 3, 2})), input_error);

  CHECK(SphereClass{}.kind == SphereClass::Kind::kUnknownOddDim);  // "not yet classified"
}

TEST_CASE("mod-8 rule over the odd d family") {
  for (const std::size_t twos : {3u, 5u, 7u}) {  // n = 3, 5, 7
    const std::int64_t d_max = twos == 3 ? 99 : 25;
    for (std::int64_t d = 3; d <= d_max; d += 2) {
      std::vector<std::int64_t> a{d};
      a.insert(a.end(), twos, 2);
      const SphereClass sc = sphere_class(Exponents(a));
      const std::int64_t r = d % 8;
      if (r == 1 || r == 7)
        CHECK(sc.kind == SphereClass::Kind::kStandardSphere);
      else
        CHECK(sc.kind == SphereClass::Kind::kKervaireSphere);
    }
  }
}

TEST_CASE("homology 3-sphere test") {
  CHECK(is_homology_3_sphere(Exponents({2, 3, 5})));
  CHECK(is_homology_3_sphere(Exponents({2, 3, 13})));
  CHECK(!is_homology_3_sphere(Exponents({2, 2, 3})));
  CHECK_THROWS_AS(is_homology_3_sphere(Exponents({2, 3})), input_error);

  // agreement with |Delta(1)| = 1
  for (std::int64_t a = 2; a <= 7; ++a)
    for (std::int64_t b = 2; b <= 7; ++b)
      for (std::int64_t c = 2; c <= 7; ++c) {
        const Exponents e({a, b, c});
        CHECK(is_homology_3_sphere(e) ==
              characteristic_factorization(e).value_at_one_is_unit());
      }
}

TEST_CASE("geometry trichotomy") {
  const GeometryType nil = geometry_type(Exponents({3, 3, 3}));
  CHECK(nil.kind == GeometryType::Kind::kNilpotent);
  CHECK(nil.reciprocal_sum == 1);

  const GeometryType sph = geometry_type(Exponents({5, 3, 2}));
  CHECK(sph.kind == GeometryType::Kind::kSpherical);
  CHECK(sph.reciprocal_sum == mpq_class(31, 30));

  const GeometryType hyp = geometry_type(Exponents({7, 3, 2}));
  CHECK(hyp.kind == GeometryType::Kind::kSLTwoTilde);
  CHECK(hyp.reciprocal_sum == mpq_class(41, 42));

  CHECK_THROWS_AS(geometry_type(Exponents({2, 3, 5, 7})), input_error);
}

TEST_CASE("casson invariant") {
  CHECK(casson_invariant(Exponents({2, 3, 5})) == -1);
  CHECK_THROWS_AS(casson_invariant(Exponents({2, 2, 3})), input_error);
  CHECK_THROWS_AS(casson_invariant(Exponents({2, 3, 5, 7})), input_error);

  // the 6k-1 family: brute-force signatures, distinct values
  std::vector<mpz_class> values;
  for (std::int64_t k = 1; k <= 5; ++k) {
    const std::vector<std::int64_t> a{2, 3, 6 * k - 1};
    const BruteResult expect = brute_force(a);
    const mpz_class casson = casson_invariant(Exponents(a));
    CHECK(8 * casson == mpz_class(expect.sig_plus - expect.sig_minus));
    CHECK(casson == -k);
    values.push_back(casson);
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      CHECK(values[i] != values[j]);
}

TEST_CASE("casson parity on spheres bounding contractible manifolds") {
  // these bound contractible four-manifolds, so the Rokhlin invariant
  // vanishes and the Casson invariant must be even
  for (const auto& a : std::vector<std::vector<std::int64_t>>{
           {2, 3, 13}, {2, 5, 7}, {3, 4, 5}}) {
    CHECK(casson_invariant(Exponents(a)) % 2 == 0);
  }
}

TEST_CASE("casson divisibility over coprime triples") {
  for (std::int64_t a = 2; a <= 12; ++a)
    for (std::int64_t b = a + 1; b <= 12; ++b)
      for (std::int64_t c = b + 1; c <= 12; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
          continue;
        CHECK(signature(Exponents({a, b, c})) % 8 == 0);
      }
}

TEST_CASE("worker counts and both engines agree bit for bit") {
  const Exponents e({7, 5, 3, 2});
  EnumerationOptions one, two, eight, conv;
  one.workers = 1;
  two.workers = 2;
  eight.workers = 8;
  conv.path = EnumerationOptions::Path::kConvolution;

  const std::string base = spectrum_text(monodromy_spectrum(e, one));
  CHECK(base == spectrum_text(monodromy_spectrum(e, two)));
  CHECK(base == spectrum_text(monodromy_spectrum(e, eight)));
  CHECK(base == spectrum_text(monodromy_spectrum(e, conv)));
  CHECK(sum_distribution(e, one).counts == sum_distribution(e, eight).counts);
  CHECK(signature(Exponents({6, 4, 3}), one) == signature(Exponents({6, 4, 3}), eight));

  // more workers than tuples
  const Exponents tiny({3, 2, 2, 2, 2, 2});
  CHECK(sum_distribution(tiny, one).counts == sum_distribution(tiny, eight).counts);

  EnumerationOptions direct;
  direct.path = EnumerationOptions::Path::kDirect;
  for (const auto& a : small_corpus()) {
    const SumDistribution d1 = sum_distribution(Exponents(a), direct);
    const SumDistribution d2 = sum_distribution(Exponents(a), conv);
    CHECK(d1.modulus == d2.modulus);
    CHECK(d1.counts == d2.counts);
  }
}

TEST_CASE("enumeration budget errors") {
  EnumerationOptions tiny;
  tiny.budget = 1000;
  CHECK_THROWS_AS(monodromy_spectrum(Exponents({9973, 9967}), tiny), budget_error);
  // representable via the residue table even though the tuple count is huge
  EnumerationOptions conv_ok;
  conv_ok.budget = 100;
  const MonodromySpectrum spec = monodromy_spectrum(Exponents({3, 3, 3, 3, 3, 3, 3, 3, 3, 3}), conv_ok);
  CHECK(spec.total == 1024);
}
