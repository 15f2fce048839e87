#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "nart/elimination.hpp"
#include "nart/nested.hpp"
#include "nart/series.hpp"

namespace nart {

using Image = std::variant<Polynomial, TruncatedSeries>;

// phi: k[x]/I -> k[y]/J given by x_i -> images[i], with images in k[y] or
// k[[y]] (then only known to some order). Every image must vanish at 0.
class AlgebraMorphism {
 public:
  AlgebraMorphism(RingPtr source, RingPtr target, std::vector<Image> images, PolyIdeal I, PolyIdeal J);

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  // Ring (x, y): x-block from the source, y-block from the target.
  const RingPtr& graph_ring() const noexcept { return graph_; }
  const std::vector<Image>& images() const noexcept { return images_; }
  const PolyIdeal& source_ideal() const noexcept { return I_; }
  const PolyIdeal& target_ideal() const noexcept { return J_; }

  bool polynomial_images() const;
  // Least known order over the series images; nullopt when all are exact.
  std::optional<unsigned> images_known_order() const;
  std::vector<TruncatedSeries> image_series(unsigned order) const;
  std::vector<Polynomial> image_polynomials() const;

  // x-polynomial moved into the graph ring, y-polynomial likewise.
  Polynomial from_source(const Polynomial& p) const;
  Polynomial from_target(const Polynomial& p) const;
  Polynomial to_source(const Polynomial& p) const;

 private:
  RingPtr source_;
  RingPtr target_;
  RingPtr graph_;
  std::vector<Image> images_;
  PolyIdeal I_;
  PolyIdeal J_;
};

// ker(phi) = (J + (x_i - phi_i)) ∩ k[x], generators reduced modulo I (those
// in I dropped). NonPolynomialImages unless every image is a polynomial.
PolyIdeal kernel_exact(const AlgebraMorphism& phi);

// Candidate spaces { trunc_c f : deg f < cprime, f - sum q_k h_k - sum (x_i - phi_i) k_i
// = 0 mod (x, y)^cprime }, as bases of normal forms modulo trunc_c(I), for
// c = 1..c_max (entry 0 unused).
std::vector<std::vector<Polynomial>> truncated_kernel_candidates(const AlgebraMorphism& phi, unsigned c_max,
                                                                 unsigned cprime);

struct KernelReport {
  unsigned c;
  unsigned cprime;
  std::vector<Polynomial> candidate_basis;
  bool stabilized;
  std::optional<PolyIdeal> exact_kernel;
};

// Candidates at each cprime of the schedule; stabilized when the last two
// schedule entries give the same space.
KernelReport truncated_completion_kernel(const AlgebraMorphism& phi, unsigned c, std::vector<unsigned> schedule);
std::vector<unsigned> default_kernel_schedule(unsigned c);

// Solution (f, h, k) of the kernel system at cprime with trunc_c f = candidate.
std::optional<SeriesVector> kernel_certificate(const AlgebraMorphism& phi, const Polynomial& candidate, unsigned c,
                                               unsigned cprime);

struct KernelScan {
  unsigned c;
  // Candidate basis for cprime = c, c + 1, ..., cprime_max.
  std::vector<std::vector<Polynomial>> by_cprime;
  // First cprime whose space equals the one at cprime + 1.
  std::optional<unsigned> stabilized_at;
  const std::vector<Polynomial>& at(unsigned cprime) const { return by_cprime.at(cprime - c); }
};

std::vector<KernelScan> scan_truncated_kernel(const AlgebraMorphism& phi, unsigned c_max, unsigned cprime_max);

// trunc_c of the exact kernel, as normal forms modulo trunc_c(I).
std::vector<Polynomial> exact_kernel_truncation(const AlgebraMorphism& phi, const PolyIdeal& kernel, unsigned c);

struct InjectivityReport {
  unsigned c;
  unsigned cprime;
  PolyIdeal exact_kernel;
  std::vector<Polynomial> exact_span;
  std::vector<Polynomial> candidate_span;
  bool equal;
};

InjectivityReport check_strong_injectivity(const AlgebraMorphism& phi, unsigned c, unsigned cprime);

// Same comparison given both spans, modulo trunc_c(I).
bool same_kernel_span(const AlgebraMorphism& phi, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                      unsigned c);

// f over the source with f(phi) = b modulo J and (y)^c, or nullopt when the
// truncated system has no solution.
std::optional<TruncatedSeries> preimage(const AlgebraMorphism& phi, const Image& b, unsigned c);

}  // namespace nart
