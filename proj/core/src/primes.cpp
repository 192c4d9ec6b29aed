#include "euler_padic/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "euler_padic/primality.hpp"
#include "format_util.hpp"
#include "kahan.hpp"

namespace euler_padic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kDefaultBudgetBytes = std::size_t(1) << 30;  // 1 GiB
constexpr u64 kSegmentOdds = 1u << 19;  // 512K odds = 1M integers per segment

std::size_t effective_budget(std::size_t requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("EULER_PADIC_MEM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudgetBytes;
}

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

// Overestimate of pi(x), used only for memory budgeting and reserve().
std::size_t prime_count_estimate(u64 x) {
  if (x < 17) return 8;
  double xd = static_cast<double>(x);
  return static_cast<std::size_t>(1.3 * xd / std::log(xd)) + 8;
}

u64 brent_pollard_rho(u64 n);

void factor_into(u64 n, std::vector<std::pair<u64, unsigned>>& out);

// One prime factor of composite odd n > 1 via Brent's cycle variant.
u64 brent_pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  auto mulmod = [n](u64 a, u64 b) { return static_cast<u64>(u128(a) * b % n); };
  for (u64 c = 1;; ++c) {
    u64 x = 2, d = 1;
    u64 saved_x = x;
    std::uint32_t power = 1, lam = 0;
    while (d == 1) {
      if (lam == power) {
        saved_x = x;
        power *= 2;
        lam = 0;
      }
      x = mulmod(x, x) + c;
      if (x >= n) x -= n;
      ++lam;
      u64 diff = x > saved_x ? x - saved_x : saved_x - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<std::pair<u64, unsigned>>& out) {
  if (n <= 1) return;
  if (is_prime(n)) {
    out.emplace_back(n, 1u);
    return;
  }
  u64 d = brent_pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Prime power p^k <= x events, ascending by value. Powers with k >= 2 only;
// the k = 1 stream is the prime list itself.
struct PowerEvent {
  u64 value;
  u64 p;
};

std::vector<PowerEvent> higher_power_events(const std::vector<u64>& primes, u64 x) {
  std::vector<PowerEvent> events;
  for (u64 p : primes) {
    if (p > x / p) break;  // p^2 > x ends the list (primes ascending)
    for (u64 q = p * p;; q *= p) {
      events.push_back({q, p});
      if (q > x / p) break;
    }
  }
  std::sort(events.begin(), events.end(),
            [](const PowerEvent& a, const PowerEvent& b) { return a.value < b.value; });
  return events;
}

void require_reduced(u64 m, u64 a) {
  if (m < 1 || std::gcd(a % m, m) != 1) {
    throw std::invalid_argument("class a = " + std::to_string(a) +
                                " is not reduced modulo m = " + std::to_string(m));
  }
}

}  // namespace

std::vector<u64> sieve_primes(u64 x, std::size_t budget_bytes) {
  std::size_t budget = effective_budget(budget_bytes);
  std::size_t need = prime_count_estimate(x) * sizeof(u64) + kSegmentOdds +
                     prime_count_estimate(isqrt_u64(x)) * sizeof(u64);
  if (need > budget) {
    throw SieveBudgetError("sieving to X = " + std::to_string(x) + " needs about " +
                           std::to_string(need) + " bytes, budget is " +
                           std::to_string(budget) +
                           " (raise EULER_PADIC_MEM_CAP or pass a larger budget)");
  }

  std::vector<u64> primes;
  if (x < 2) return primes;
  primes.reserve(prime_count_estimate(x));
  primes.push_back(2);
  if (x < 3) return primes;

  // Base odd primes up to sqrt(x), simple odds-only sieve.
  u64 root = isqrt_u64(x);
  std::vector<char> base_odd((root >= 3 ? (root - 1) / 2 : 0) + 1, 1);
  // base_odd[i] represents 2i + 3
  std::vector<u64> base_primes;
  for (u64 i = 0; 2 * i + 3 <= root; ++i) {
    if (!base_odd[i]) continue;
    u64 p = 2 * i + 3;
    base_primes.push_back(p);
    for (u64 j = (p * p - 3) / 2; 2 * j + 3 <= root; j += p) base_odd[j] = 0;
  }

  // Segments over odd numbers in [3, x].
  std::vector<char> seg(kSegmentOdds);
  for (u64 low = 3; low <= x; low += 2 * kSegmentOdds) {
    u64 high = std::min(x, low + 2 * kSegmentOdds - 2);  // odd segment [low, high]
    u64 count = (high - low) / 2 + 1;
    std::fill(seg.begin(), seg.begin() + count, 1);
    for (u64 p : base_primes) {
      if (p * p > high) break;
      u64 start = std::max(p * p, ((low + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (u64 v = start; v <= high; v += 2 * p) seg[(v - low) / 2] = 0;
    }
    for (u64 i = 0; i < count; ++i) {
      if (seg[i]) primes.push_back(low + 2 * i);
    }
  }
  return primes;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n <= 1) return out;

  std::vector<std::pair<u64, unsigned>> raw;
  for (u64 d : {2ull, 3ull, 5ull}) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) raw.emplace_back(d, e);
  }
  // 2-3-5 wheel trial division below 2^16, then rho on what survives.
  static constexpr unsigned steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  u64 d = 7;
  unsigned idx = 0;
  while (d < 65536 && d <= n / d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) raw.emplace_back(d, e);
    d += steps[idx];
    idx = (idx + 1) & 7;
  }
  if (n > 1) {
    if (n < u64(65536) * 65536 || is_prime(n)) {
      raw.emplace_back(n, 1u);
    } else {
      std::vector<std::pair<u64, unsigned>> hard;
      factor_into(n, hard);
      raw.insert(raw.end(), hard.begin(), hard.end());
    }
  }

  std::sort(raw.begin(), raw.end());
  for (auto& [p, e] : raw) {
    if (!out.empty() && out.back().first == p) {
      out.back().second += e;
    } else {
      out.emplace_back(p, e);
    }
  }
  return out;
}

u64 euler_phi(u64 m) {
  if (m < 1) throw std::invalid_argument("euler_phi requires m >= 1");
  u64 phi = m;
  for (auto [p, e] : factorize(m)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

ResidueSystem reduced_classes(u64 m) {
  if (m < 3) {
    throw std::invalid_argument("reduced residue scan requires m >= 3");
  }
  ResidueSystem sys;
  sys.m = m;
  for (u64 a = 1; a < m; ++a) {
    if (std::gcd(a, m) == 1) sys.classes.push_back(a);
  }
  sys.phi = sys.classes.size();
  return sys;
}

double theta(double x, u64 m, u64 a) {
  require_reduced(m, a);
  if (!(x >= 0)) throw std::invalid_argument("theta requires x >= 0");
  if (x < 2) return 0.0;
  u64 limit = static_cast<u64>(x);
  u64 target = a % m;
  detail::Kahan sum;
  for (u64 p : sieve_primes(limit)) {
    if (p % m == target) sum.add(std::log(static_cast<double>(p)));
  }
  return sum.value();
}

double psi(double x, u64 m, u64 a) {
  require_reduced(m, a);
  if (!(x >= 0)) throw std::invalid_argument("psi requires x >= 0");
  if (x < 2) return 0.0;
  u64 limit = static_cast<u64>(x);
  u64 target = a % m;
  auto primes = sieve_primes(limit);
  auto higher = higher_power_events(primes, limit);

  // Merge the k = 1 stream (the primes) with the k >= 2 stream by value so
  // accumulation order is ascending prime-power value, deterministically.
  detail::Kahan sum;
  std::size_t hi = 0;
  for (u64 p : primes) {
    while (hi < higher.size() && higher[hi].value < p) {
      if (higher[hi].value % m == target)
        sum.add(std::log(static_cast<double>(higher[hi].p)));
      ++hi;
    }
    if (p % m == target) sum.add(std::log(static_cast<double>(p)));
  }
  for (; hi < higher.size(); ++hi) {
    if (higher[hi].value % m == target)
      sum.add(std::log(static_cast<double>(higher[hi].p)));
  }
  return sum.value();
}

ThetaProfile theta_error_profile(const std::vector<double>& xs, u64 m, u64 a) {
  require_reduced(m, a);
  for (double x : xs) {
    if (!(x >= 2)) throw std::invalid_argument("profile sample points must satisfy x >= 2");
  }

  ThetaProfile profile;
  profile.m = m;
  profile.a = a % m;
  profile.samples.resize(xs.size());

  if (xs.empty()) return profile;

  double phi = static_cast<double>(euler_phi(m));
  u64 target = a % m;

  // One shared sieve pass to the largest sample.
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&xs](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
  u64 max_x = static_cast<u64>(xs[order.back()]);

  auto primes = sieve_primes(max_x);
  auto higher = higher_power_events(primes, max_x);

  // Sweep ascending: theta over primes, psi over merged prime powers. The
  // Kahan prefix at each threshold matches the standalone theta()/psi()
  // calls bit for bit.
  detail::Kahan theta_sum;
  detail::Kahan psi_sum;
  std::size_t pi = 0;  // next prime
  std::size_t hi = 0;  // next higher power
  for (std::size_t oi : order) {
    u64 limit = static_cast<u64>(xs[oi]);
    while (true) {
      u64 next_p = pi < primes.size() ? primes[pi] : 0;
      u64 next_h = hi < higher.size() ? higher[hi].value : 0;
      bool take_higher =
          next_h != 0 && next_h <= limit && (next_p == 0 || next_h < next_p);
      bool take_prime = !take_higher && next_p != 0 && next_p <= limit;
      if (take_higher) {
        if (next_h % m == target)
          psi_sum.add(std::log(static_cast<double>(higher[hi].p)));
        ++hi;
      } else if (take_prime) {
        double lp = std::log(static_cast<double>(next_p));
        if (next_p % m == target) {
          theta_sum.add(lp);
          psi_sum.add(lp);
        }
        ++pi;
      } else {
        break;
      }
    }
    ThetaSample& s = profile.samples[oi];
    s.x = xs[oi];
    s.theta = theta_sum.value();
    s.psi = psi_sum.value();
    s.main_term = xs[oi] / phi;
    double lx = std::log(xs[oi]);
    s.err_unconditional = std::abs(s.theta - s.main_term) * lx / xs[oi];
    s.err_grh = std::abs(s.psi - s.main_term) / (std::sqrt(xs[oi]) * lx * lx);
  }
  return profile;
}

std::string profile_to_csv(const ThetaProfile& profile) {
  std::string csv = "x,theta,psi,main_term,err_unconditional,err_grh\n";
  for (const ThetaSample& s : profile.samples) {
    csv += detail::format_double(s.x);
    csv += ',';
    csv += detail::format_double(s.theta);
    csv += ',';
    csv += detail::format_double(s.psi);
    csv += ',';
    csv += detail::format_double(s.main_term);
    csv += ',';
    csv += detail::format_double(s.err_unconditional);
    csv += ',';
    csv += detail::format_double(s.err_grh);
    csv += '\n';
  }
  return csv;
}

}  // namespace euler_padic
