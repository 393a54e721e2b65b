#include "brieskorn/spectrum.hpp"

#include <cstdlib>
#include <exception>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <vector>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

// Dense per-worker accumulators above this table size would get expensive;
// fall back to hashing.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 25;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return static_cast<std::uint64_t>(v);
}

struct Lattice {
  std::uint64_t two_l = 0;
  std::vector<std::uint64_t> stride;       // M_j = L / a_j
  std::vector<std::uint64_t> radix;        // a_j - 1
  std::vector<std::uint64_t> reset;        // (radix_j * stride_j) mod 2L
};

Lattice build_lattice(const Exponents& a) {
  const mpz_class lcm = a.lcm();
  const mpz_class two_l_z = 2 * lcm;
  if (!fits_uint64(two_l_z) || to_uint64(two_l_z) > (std::uint64_t{1} << 63))
    throw budget_error("2*lcm of the exponents exceeds 64-bit residue indexing");
  Lattice lat;
  lat.two_l = to_uint64(two_l_z);
  for (std::int64_t ai : a.values()) {
    const mpz_class m = lcm / static_cast<long>(ai);
    lat.stride.push_back(to_uint64(m));
    lat.radix.push_back(static_cast<std::uint64_t>(ai - 1));
    const unsigned __int128 r =
        static_cast<unsigned __int128>(lat.radix.back()) * lat.stride.back();
    lat.reset.push_back(static_cast<std::uint64_t>(r % lat.two_l));
  }
  return lat;
}

// Walks `count` tuples starting at mixed-radix index `start` (last digit
// fastest), feeding each tuple's residue to the sink.
template <typename Sink>
void enumerate_range(const Lattice& lat, std::uint64_t start, std::uint64_t count,
                     Sink&& sink) {
  const std::size_t dims = lat.radix.size();
  std::vector<std::uint64_t> digit(dims, 0);
  std::uint64_t idx = start;
  for (std::size_t j = dims; j-- > 0;) {
    digit[j] = idx % lat.radix[j];
    idx /= lat.radix[j];
  }
  std::uint64_t residue = 0;
  for (std::size_t j = 0; j < dims; ++j) {
    const unsigned __int128 c =
        static_cast<unsigned __int128>(digit[j] + 1) * lat.stride[j];
    residue = (residue + static_cast<std::uint64_t>(c % lat.two_l)) % lat.two_l;
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    sink(residue);
    for (std::size_t pos = dims; pos-- > 0;) {
      ++digit[pos];
      residue += lat.stride[pos];
      if (residue >= lat.two_l) residue -= lat.two_l;
      if (digit[pos] < lat.radix[pos]) break;
      digit[pos] = 0;
      residue += lat.two_l - lat.reset[pos];
      if (residue >= lat.two_l) residue -= lat.two_l;
    }
  }
}

struct WorkerCounts {
  std::vector<std::uint64_t> dense;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse;
  bool use_dense = false;
};

SumDistribution run_direct(const Lattice& lat, std::uint64_t total,
                           unsigned workers) {
  workers = std::max(1u, workers);
  if (workers > 256) workers = 256;
  if (total > 0 && workers > total)
    workers = static_cast<unsigned>(total);

  const bool dense = lat.two_l <= kDenseLimit;
  std::vector<WorkerCounts> parts(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto run = [&](unsigned w) {
    try {
      WorkerCounts& wc = parts[w];
      wc.use_dense = dense;
      if (dense) wc.dense.assign(lat.two_l, 0);
      const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      const std::uint64_t size = total / workers + (w < total % workers ? 1 : 0);
      if (size == 0) return;
      if (dense) {
        enumerate_range(lat, begin, size,
                        [&wc](std::uint64_t r) { ++wc.dense[r]; });
      } else {
        enumerate_range(lat, begin, size,
                        [&wc](std::uint64_t r) { ++wc.sparse[r]; });
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Merging is plain integer addition, so the result is independent of the
  // partitioning.
  SumDistribution dist;
  dist.modulus = lat.two_l;
  for (const WorkerCounts& wc : parts) {
    if (wc.use_dense) {
      for (std::uint64_t r = 0; r < wc.dense.size(); ++r)
        if (wc.dense[r]) dist.counts[r] += static_cast<unsigned long>(wc.dense[r]);
    } else {
      for (const auto& [r, c] : wc.sparse)
        dist.counts[r] += static_cast<unsigned long>(c);
    }
  }
  return dist;
}

// One factor's contribution is a cyclic shift-and-sum with stride M over
// Z/2L: new[r] = sum_{k=1..reps} old[r - k*M].  Along each orbit of +M this
// is a sliding window, so the whole factor costs O(2L) ring operations.
template <typename T>
void convolve_factor(std::vector<T>& dist, std::uint64_t two_l,
                     std::uint64_t stride, std::uint64_t reps) {
  const std::uint64_t g = std::gcd(stride, two_l);
  const std::uint64_t cycle = two_l / g;
  const std::uint64_t full = reps / cycle;
  const std::uint64_t rem = reps % cycle;
  std::vector<T> orbit(cycle);
  std::vector<std::uint64_t> pos(cycle);
  for (std::uint64_t s = 0; s < g; ++s) {
    std::uint64_t p = s;
    for (std::uint64_t i = 0; i < cycle; ++i) {
      pos[i] = p;
      orbit[i] = dist[p];
      p += stride;
      if (p >= two_l) p -= two_l;
    }
    T orbit_total{};
    if (full > 0)
      for (const T& v : orbit) orbit_total += v;
    T window{};
    for (std::uint64_t k = 1; k <= rem; ++k) window += orbit[cycle - k];
    for (std::uint64_t i = 0; i < cycle; ++i) {
      T v = window;
      if (full > 0) v += orbit_total * static_cast<unsigned long>(full);
      dist[pos[i]] = v;
      window += orbit[i];
      window -= orbit[(i + cycle - rem) % cycle];
    }
  }
}

template <typename T>
SumDistribution run_convolution_typed(const Lattice& lat) {
  std::vector<T> dist(lat.two_l, T{});
  dist[0] = 1;
  for (std::size_t j = 0; j < lat.radix.size(); ++j)
    convolve_factor(dist, lat.two_l, lat.stride[j], lat.radix[j]);
  SumDistribution out;
  out.modulus = lat.two_l;
  for (std::uint64_t r = 0; r < lat.two_l; ++r)
    if (dist[r] != 0) out.counts[r] = dist[r];
  return out;
}

SumDistribution run_convolution(const Lattice& lat, const mpz_class& mu) {
  // Intermediate counts never exceed the final total, so 64-bit cells are
  // safe whenever the Milnor number fits.
  if (fits_uint64(mu)) return run_convolution_typed<std::uint64_t>(lat);
  return run_convolution_typed<mpz_class>(lat);
}

}  // namespace

EnumerationOptions EnumerationOptions::from_environment() {
  EnumerationOptions opts;
  opts.budget = env_u64("BRIESKORN_BUDGET", opts.budget);
  opts.workers = static_cast<unsigned>(env_u64("BRIESKORN_WORKERS", opts.workers));
  return opts;
}

mpz_class SumDistribution::total() const {
  mpz_class t = 0;
  for (const auto& [r, c] : counts) t += c;
  return t;
}

SumDistribution sum_distribution(const Exponents& a, const EnumerationOptions& opts) {
  mpz_class mu = 1;
  for (std::int64_t ai : a.values()) mu *= static_cast<long>(ai - 1);

  const Lattice lat = build_lattice(a);
  const mpz_class budget = mpz_class(static_cast<unsigned long>(opts.budget));
  const bool direct_ok = mu <= budget;
  const bool conv_ok = lat.two_l <= opts.budget;

  EnumerationOptions::Path path = opts.path;
  if (path == EnumerationOptions::Path::kAuto) {
    if (conv_ok && (!direct_ok ||
                    mpz_class(static_cast<unsigned long>(lat.two_l)) *
                            static_cast<unsigned long>(4 * a.count()) <
                        mu))
      path = EnumerationOptions::Path::kConvolution;
    else if (direct_ok)
      path = EnumerationOptions::Path::kDirect;
    else
      throw budget_error(
          "enumeration budget exceeded: " + mu.get_str() +
          " tuples to enumerate and residue table of length " +
          std::to_string(lat.two_l) + " both above budget " +
          std::to_string(opts.budget));
  }

  SumDistribution dist;
  if (path == EnumerationOptions::Path::kDirect) {
    if (!direct_ok)
      throw budget_error("enumeration budget exceeded: " + mu.get_str() +
                         " tuples, budget " + std::to_string(opts.budget));
    dist = run_direct(lat, to_uint64(mu), opts.workers);
  } else {
    if (!conv_ok)
      throw budget_error("enumeration budget exceeded: residue table of length " +
                         std::to_string(lat.two_l) + ", budget " +
                         std::to_string(opts.budget));
    dist = run_convolution(lat, mu);
  }

  if (dist.total() != mu)
    throw internal_error("sum distribution total does not match the Milnor number");
  return dist;
}

std::string Rotation::to_string() const {
  if (num == 0) return "0";
  return std::to_string(num) + "/" + std::to_string(den);
}

MonodromySpectrum spectrum_from_distribution(const SumDistribution& dist) {
  const std::uint64_t big_l = dist.modulus / 2;
  MonodromySpectrum spec;
  for (const auto& [r, c] : dist.counts) {
    const std::uint64_t rot = r % big_l;
    Rotation key;
    if (rot == 0) {
      key = Rotation{0, 1};
    } else {
      const std::uint64_t g = std::gcd(rot, big_l);
      key = Rotation{rot / g, big_l / g};
    }
    spec.entries[key] += c;
    spec.total += c;
  }
  return spec;
}

MonodromySpectrum monodromy_spectrum(const Exponents& a,
                                     const EnumerationOptions& opts) {
  return spectrum_from_distribution(sum_distribution(a, opts));
}

}  // namespace brieskorn
