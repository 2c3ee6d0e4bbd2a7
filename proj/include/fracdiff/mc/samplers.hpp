#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "fracdiff/error.hpp"
#include "fracdiff/mc/parallel.hpp"
#include "fracdiff/mc/philox.hpp"

namespace fracdiff::mc {

struct SampleBatch {
  std::vector<double> values;
  std::string tag;
  double t = 0.0;
  RngStream seed;
};

// draws per counter block; block b of the stream fills values [b*kChunk, (b+1)*kChunk)
inline constexpr std::size_t kChunk = 1 << 16;

// W_t envelope: Y ~ exp(-y^4) on y > 0 from a half-normal proposal exp(-y^2),
// accepted with probability exp(-(y^2 - 1/2)^2). Mean acceptance:
inline constexpr double kQuarticAcceptance = 0.7969;

template <class Draw>
SampleBatch sample_batch(std::size_t n, const RngStream& rng, std::string tag, double t, Draw&& draw,
                         unsigned threads = default_threads()) {
  SampleBatch b{std::vector<double>(n), std::move(tag), t, rng};
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  parallel_for(
      chunks,
      [&](std::size_t c) {
        PhiloxEngine g(rng, static_cast<std::uint32_t>(c));
        const std::size_t end = std::min(n, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) b.values[i] = draw(g);
      },
      threads);
  for (double v : b.values)
    if (!std::isfinite(v)) throw NumericalError("sample_batch: non-finite draw in " + b.tag);
  return b;
}

namespace draw {

// Laplace transform exp(-s^alpha), 0 < alpha < 1 (Kanter / Chambers-Mallows-Stuck)
inline double one_sided_stable(PhiloxEngine& g, double alpha) {
  const double u = std::numbers::pi * g.uniform();
  const double e = g.exponential();
  return std::sin(alpha * u) / std::pow(std::sin(u), 1.0 / alpha) *
         std::pow(std::sin((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
}

// characteristic function exp(-|beta|^alpha), 0 < alpha <= 2
inline double symmetric_stable(PhiloxEngine& g, double alpha) {
  const double u = std::numbers::pi * (g.uniform() - 0.5);
  const double w = g.exponential();
  if (alpha == 1.0) return std::tan(u);
  return std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha) *
         std::pow(std::cos((1.0 - alpha) * u) / w, (1.0 - alpha) / alpha);
}

// ratio of two independent one-sided stables; alpha = 1 is the point mass at 1
inline double lamperti(PhiloxEngine& g, double alpha) {
  if (alpha == 1.0) return 1.0;
  const double s1 = one_sided_stable(g, alpha);
  const double s2 = one_sided_stable(g, alpha);
  return s1 / s2;
}

// Y with density proportional to exp(-y^4) on y > 0
inline double quartic(PhiloxEngine& g) {
  while (true) {
    const double y = std::abs(g.normal()) * std::numbers::sqrt2 * 0.5;
    const double d = y * y - 0.5;
    if (g.uniform() <= std::exp(-d * d)) return y;
  }
}

}  // namespace draw

namespace detail {
inline void check_n(std::size_t n) {
  if (n == 0) throw DomainError("sampler: n must be positive");
}
inline void check_t(double t, bool allow_zero = false) {
  if (!(allow_zero ? t >= 0.0 : t > 0.0)) throw DomainError("sampler: invalid t");
}
inline void check_hurst(double h) {
  if (!(h > 0.0 && h < 1.0)) throw DomainError("sampler: hurst must lie in (0,1)");
}
}  // namespace detail

// N(0, t^{2H})
inline SampleBatch sample_fbm_marginal(double hurst, double t, std::size_t n, const RngStream& rng) {
  detail::check_hurst(hurst);
  detail::check_t(t, true);
  detail::check_n(n);
  const double s = std::pow(t, hurst);
  return sample_batch(n, rng, "fbm", t, [s](PhiloxEngine& g) { return s * g.normal(); });
}

// B_H^1(|B_H^2(t)|^{1/2H}) with Var B_H^2(t) = 4 t^{2H}: given Z2, the output is N(0, |Z2|)
inline SampleBatch sample_iterated_fbm(double hurst, double t, std::size_t n, const RngStream& rng) {
  detail::check_hurst(hurst);
  detail::check_t(t);
  detail::check_n(n);
  const double s2 = 2.0 * std::pow(t, hurst);
  return sample_batch(n, rng, "iterated-fbm", t, [s2, hurst](PhiloxEngine& g) {
    const double z2 = s2 * g.normal();
    const double z = std::pow(std::abs(z2), 1.0 / (2.0 * hurst));
    return std::pow(z, hurst) * g.normal();
  });
}

inline SampleBatch sample_one_sided_stable(double alpha, std::size_t n, const RngStream& rng) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("sample_one_sided_stable: alpha must lie in (0,1)");
  detail::check_n(n);
  return sample_batch(n, rng, "one-sided-stable", 0.0,
                      [alpha](PhiloxEngine& g) { return draw::one_sided_stable(g, alpha); });
}

inline SampleBatch sample_symmetric_stable(double alpha, std::size_t n, const RngStream& rng) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("sample_symmetric_stable: alpha must lie in (0,2]");
  detail::check_n(n);
  return sample_batch(n, rng, "symmetric-stable", 0.0,
                      [alpha](PhiloxEngine& g) { return draw::symmetric_stable(g, alpha); });
}

inline SampleBatch sample_lamperti(double alpha, std::size_t n, const RngStream& rng) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("sample_lamperti: alpha must lie in (0,1)");
  detail::check_n(n);
  return sample_batch(n, rng, "lamperti", 0.0, [alpha](PhiloxEngine& g) { return draw::lamperti(g, alpha); });
}

enum class Subordinator { Wt, FrakWt };

inline const char* to_string(Subordinator s) { return s == Subordinator::Wt ? "Wt" : "frakWt"; }

// W_t: density exp(-z^4/(16t)); frak-W_t: density exp(-z^4/t)
inline double subordinator_scale(Subordinator s, double t) {
  return s == Subordinator::Wt ? std::pow(16.0 * t, 0.25) : std::pow(t, 0.25);
}

inline SampleBatch sample_Wt(double t, std::size_t n, const RngStream& rng, Subordinator s = Subordinator::Wt) {
  detail::check_t(t);
  detail::check_n(n);
  const double c = subordinator_scale(s, t);
  return sample_batch(n, rng, to_string(s), t, [c](PhiloxEngine& g) { return c * draw::quartic(g); });
}

// B(W_t): Brownian motion at the random time W_t
inline SampleBatch sample_B_of_Wt(double t, std::size_t n, const RngStream& rng,
                                  Subordinator s = Subordinator::Wt) {
  detail::check_t(t);
  detail::check_n(n);
  const double c = subordinator_scale(s, t);
  return sample_batch(n, rng, std::string("B(") + to_string(s) + ")", t, [c](PhiloxEngine& g) {
    const double w = c * draw::quartic(g);
    return std::sqrt(w) * g.normal();
  });
}

// Y_order at the random time: characteristic function E exp(-W |beta|^order)
inline SampleBatch sample_stable_of_Wt(double order, double t, std::size_t n, const RngStream& rng,
                                       Subordinator s = Subordinator::FrakWt) {
  if (!(order > 0.0 && order <= 2.0)) throw DomainError("sample_stable_of_Wt: order must lie in (0,2]");
  detail::check_t(t);
  detail::check_n(n);
  const double c = subordinator_scale(s, t);
  return sample_batch(n, rng, std::string("Y(") + to_string(s) + ")", t, [c, order](PhiloxEngine& g) {
    const double w = c * draw::quartic(g);
    return std::pow(w, 1.0 / order) * draw::symmetric_stable(g, order);
  });
}

// Symmetric stable of order space/time_order at time scale * W_{time_order}.
// Characteristic function E_{nu}(-|beta|^space t^nu / 2) for scale = 2^{-1/nu} t.
struct LampertiTimeSpec {
  double gamma = 1.0;  // outer Lamperti order (1: single mixture)
  double eta = 1.0;    // inner Lamperti order
  double space = 2.0;  // Riesz order alpha
  double scale = 1.0;  // deterministic time factor
};

inline LampertiTimeSpec lamperti_time_single(double nu, double space, double t) {
  return {1.0, nu, space, std::pow(2.0, -1.0 / nu) * t};
}

inline LampertiTimeSpec lamperti_time_printed(double nu, double space, double t) {
  return {1.0, nu, space, t / std::pow(2.0, nu)};
}

inline LampertiTimeSpec lamperti_time_double(double gamma, double eta, double space, double t) {
  return {gamma, eta, space, std::pow(2.0, -1.0 / (gamma * eta)) * t};
}

// McBride model with Riesz space order: E_alpha(-|beta|^space t^{2H alpha} / 2^alpha)
inline LampertiTimeSpec lamperti_time_mcbride(double alpha, double hurst, double space, double t) {
  return {1.0, alpha, space, 0.5 * std::pow(t, 2.0 * hurst)};
}

// Y_{space/(gamma eta)}(scale * W_eta * W_gamma^{1/eta})
inline SampleBatch sample_stable_lamperti_time(const LampertiTimeSpec& s, double t, std::size_t n,
                                               const RngStream& rng) {
  if (!(s.gamma > 0.0 && s.gamma <= 1.0 && s.eta > 0.0 && s.eta <= 1.0))
    throw DomainError("sample_stable_lamperti_time: Lamperti orders must lie in (0,1]");
  if (!(s.space > 0.0 && s.space <= 2.0)) throw DomainError("sample_stable_lamperti_time: space order must lie in (0,2]");
  const double order = s.space / (s.gamma * s.eta);
  if (!(order > 0.0 && order <= 2.0))
    throw DomainError("sample_stable_lamperti_time: composed stable order " + std::to_string(order) +
                      " outside (0,2]");
  if (!(s.scale > 0.0)) throw DomainError("sample_stable_lamperti_time: scale must be positive");
  detail::check_n(n);
  return sample_batch(n, rng, "stable-lamperti-time", t, [s, order](PhiloxEngine& g) {
    double w = draw::lamperti(g, s.eta);
    if (s.gamma < 1.0) w *= std::pow(draw::lamperti(g, s.gamma), 1.0 / s.eta);
    return std::pow(s.scale * w, 1.0 / order) * draw::symmetric_stable(g, order);
  });
}

}  // namespace fracdiff::mc
