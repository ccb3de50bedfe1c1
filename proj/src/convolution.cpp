#include "hdo/convolution.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <numbers>

#include "hdo/errors.hpp"

namespace hdo {

namespace {

using cd = std::complex<double>;

constexpr int kMaxFloatLog = 30;

// exp(2*pi*i*k/L) for k < L/2, each root evaluated directly from its angle.
const std::vector<cd>& root_table(int log_len) {
  static std::array<std::once_flag, kMaxFloatLog + 1> once;
  static std::array<std::vector<cd>, kMaxFloatLog + 1> tables;
  std::call_once(once[log_len], [log_len] {
    const std::size_t len = std::size_t{1} << log_len;
    std::vector<cd> roots(std::max<std::size_t>(len / 2, 1));
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len);
      roots[k] = cd(std::cos(angle), std::sin(angle));
    }
    tables[log_len] = std::move(roots);
  });
  return tables[log_len];
}

void bit_reverse(std::span<cd> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

void fft(std::span<cd> a, bool inverse) {
  const std::size_t n = a.size();
  const int log_n = std::countr_zero(n);
  const auto& roots = root_table(log_n);
  bit_reverse(a);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        cd w = roots[k * stride];
        if (inverse) w = std::conj(w);
        const cd u = a[start + k];
        const cd v = a[start + k + half] * w;
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

CountSeq convolve_floating(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t len = std::bit_ceil(out_len);
  // Both real inputs share one complex transform: z = a + i*b.
  std::vector<cd> z(len);
  for (std::size_t k = 0; k < a.size(); ++k) z[k].real(static_cast<double>(a[k]));
  for (std::size_t k = 0; k < b.size(); ++k) z[k].imag(static_cast<double>(b[k]));
  fft(z, false);

  std::vector<cd> prod(len);
  for (std::size_t k = 0; k < len; ++k) {
    const cd zk = z[k];
    const cd zr = std::conj(z[(len - k) & (len - 1)]);
    const cd fa = (zk + zr) * 0.5;
    const cd fb = (zk - zr) * cd(0.0, -0.5);
    prod[k] = fa * fb;
  }
  fft(prod, true);

  CountSeq out(out_len);
  const double scale = 1.0 / static_cast<double>(len);
  for (std::size_t k = 0; k < out_len; ++k) {
    const double v = std::round(prod[k].real() * scale);
    out[k] = v <= 0.0 ? 0 : static_cast<std::uint64_t>(v);
  }
  return out;
}

// Modular transform over three NTT-friendly primes, recombined exactly.
struct NttPrime {
  std::uint64_t p;
  std::uint64_t generator;
  int max_log;
};

constexpr std::array<NttPrime, 3> kPrimes{{
    {998244353, 3, 23},
    {167772161, 3, 25},
    {469762049, 3, 26},
}};
constexpr int kMaxModularLog = 23;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

void ntt(std::vector<std::uint64_t>& a, const NttPrime& prime, bool inverse) {
  const std::size_t n = a.size();
  const std::uint64_t p = prime.p;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t wlen = pow_mod(prime.generator, (p - 1) / len, p);
    if (inverse) wlen = pow_mod(wlen, p - 2, p);
    const std::size_t half = len / 2;
    std::vector<std::uint64_t> w(half);
    w[0] = 1;
    for (std::size_t k = 1; k < half; ++k) w[k] = w[k - 1] * wlen % p;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::uint64_t u = a[start + k];
        const std::uint64_t v = a[start + k + half] * w[k] % p;
        a[start + k] = u + v >= p ? u + v - p : u + v;
        a[start + k + half] = u >= v ? u - v : u + p - v;
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = pow_mod(n, p - 2, p);
    for (auto& v : a) v = v * inv_n % p;
  }
}

std::vector<std::uint64_t> convolve_mod(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b, std::size_t len,
                                        const NttPrime& prime) {
  std::vector<std::uint64_t> fa(len, 0), fb(len, 0);
  for (std::size_t k = 0; k < a.size(); ++k) fa[k] = a[k] % prime.p;
  for (std::size_t k = 0; k < b.size(); ++k) fb[k] = b[k] % prime.p;
  ntt(fa, prime, false);
  ntt(fb, prime, false);
  for (std::size_t k = 0; k < len; ++k) fa[k] = fa[k] * fb[k] % prime.p;
  ntt(fa, prime, true);
  return fa;
}

CountSeq convolve_modular(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t len = std::bit_ceil(out_len);
  if (std::countr_zero(len) > kMaxModularLog) {
    throw ResourceGuardError("modular convolution length " + std::to_string(len) +
                             " exceeds 2^" + std::to_string(kMaxModularLog));
  }
  const auto r0 = convolve_mod(a, b, len, kPrimes[0]);
  const auto r1 = convolve_mod(a, b, len, kPrimes[1]);
  const auto r2 = convolve_mod(a, b, len, kPrimes[2]);

  const std::uint64_t p0 = kPrimes[0].p, p1 = kPrimes[1].p, p2 = kPrimes[2].p;
  const std::uint64_t inv_p0_mod_p1 = pow_mod(p0, p1 - 2, p1);
  const std::uint64_t p0p1_mod_p2 = (p0 % p2) * (p1 % p2) % p2;
  const std::uint64_t inv_p0p1_mod_p2 = pow_mod(p0p1_mod_p2, p2 - 2, p2);

  CountSeq out(out_len);
  for (std::size_t k = 0; k < out_len; ++k) {
    // Garner: x = r0 + p0*t1 + p0*p1*t2.
    const std::uint64_t t1 = (r1[k] + p1 - r0[k] % p1) % p1 * inv_p0_mod_p1 % p1;
    const std::uint64_t partial_mod_p2 = (r0[k] + p0 % p2 * t1) % p2;
    const std::uint64_t t2 = (r2[k] + p2 - partial_mod_p2) % p2 * inv_p0p1_mod_p2 % p2;
    const unsigned __int128 x = static_cast<unsigned __int128>(r0[k]) +
                                static_cast<unsigned __int128>(p0) * t1 +
                                static_cast<unsigned __int128>(p0) * p1 * t2;
    out[k] = static_cast<std::uint64_t>(x);
  }
  return out;
}

CountSeq convolve_schoolbook(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  CountSeq out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::uint64_t max_of(std::span<const std::uint64_t> v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

void check_operands(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                    std::uint64_t max_a, std::uint64_t max_b) {
  if (a.empty() || b.empty()) throw ArgumentError("convolution operands must be non-empty");
  if (max_a > kMaxCoefficient || max_b > kMaxCoefficient) {
    throw ArgumentError("convolution coefficient exceeds 2^20");
  }
  const unsigned __int128 bound = static_cast<unsigned __int128>(std::min(a.size(), b.size())) *
                                  max_a * max_b;
  if (bound >= (static_cast<unsigned __int128>(1) << 63)) {
    throw ResourceGuardError("convolution result may overflow 64-bit accumulation");
  }
}

}  // namespace

double floating_error_bound(std::size_t len_a, std::uint64_t max_a, std::size_t len_b,
                            std::uint64_t max_b) {
  const double len = static_cast<double>(std::bit_ceil(len_a + len_b - 1));
  const double norm_a = std::sqrt(static_cast<double>(len_a)) * static_cast<double>(max_a);
  const double norm_b = std::sqrt(static_cast<double>(len_b)) * static_cast<double>(max_b);
  return 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::log2(len)) * norm_a *
         norm_b;
}

ConvPath select_conv_path(std::size_t len_a, std::uint64_t max_a, std::size_t len_b,
                          std::uint64_t max_b) {
  if (std::min(len_a, len_b) <= kSchoolbookCutoff) return ConvPath::schoolbook;
  const std::size_t len = std::bit_ceil(len_a + len_b - 1);
  if (std::countr_zero(len) <= kMaxFloatLog &&
      floating_error_bound(len_a, max_a, len_b, max_b) < 0.25) {
    return ConvPath::floating;
  }
  return ConvPath::modular;
}

CountSeq convolve_with(ConvPath path, std::span<const std::uint64_t> a,
                       std::span<const std::uint64_t> b, WorkCounters* work) {
  const std::uint64_t max_a = max_of(a), max_b = max_of(b);
  check_operands(a, b, max_a, max_b);
  if (work) work->conv_transform_length_total += std::bit_ceil(a.size() + b.size() - 1);
  switch (path) {
    case ConvPath::schoolbook:
      return convolve_schoolbook(a, b);
    case ConvPath::floating:
      return convolve_floating(a, b);
    case ConvPath::modular:
      return convolve_modular(a, b);
  }
  return {};
}

CountSeq convolve(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                  WorkCounters* work) {
  const std::uint64_t max_a = max_of(a), max_b = max_of(b);
  check_operands(a, b, max_a, max_b);
  return convolve_with(select_conv_path(a.size(), max_a, b.size(), max_b), a, b, work);
}

CountSeq correlate_matches(std::span<const std::uint64_t> text_mask,
                           std::span<const std::uint64_t> pattern_mask, WorkCounters* work) {
  if (pattern_mask.empty()) throw ArgumentError("pattern mask must be non-empty");
  if (pattern_mask.size() > text_mask.size()) {
    throw ArgumentError("pattern mask longer than text mask");
  }
  const std::vector<std::uint64_t> reversed(pattern_mask.rbegin(), pattern_mask.rend());
  const CountSeq full = convolve(text_mask, reversed, work);
  const std::size_t offset = pattern_mask.size() - 1;
  return CountSeq(full.begin() + static_cast<std::ptrdiff_t>(offset),
                  full.begin() + static_cast<std::ptrdiff_t>(offset + text_mask.size()));
}

}  // namespace hdo
