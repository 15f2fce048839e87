#pragma once

#include <string>
#include <vector>

#include "nart/text.hpp"

namespace testing_support {

inline nart::RingPtr ring_of(std::vector<std::string> names, std::size_t x_count,
                             nart::Field field = nart::Field::rationals()) {
  return nart::make_ring(field, std::move(names), x_count);
}

inline nart::RingPtr ring_of(std::vector<std::string> names, nart::Field field = nart::Field::rationals()) {
  std::size_t n = names.size();
  return nart::make_ring(field, std::move(names), n);
}

inline nart::Polynomial P(const nart::RingPtr& r, const std::string& text) { return nart::parse_polynomial(r, text); }

inline nart::TruncatedSeries S(const nart::RingPtr& r, const std::string& text, unsigned order) {
  return nart::TruncatedSeries::from_polynomial(P(r, text), order);
}

inline std::vector<nart::Polynomial> Ps(const nart::RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<nart::Polynomial> out;
  for (const auto& t : texts) out.push_back(P(r, t));
  return out;
}

inline nart::Scalar Q(long num, long den = 1) { return nart::Scalar(mpq_class(num, den)); }

}  // namespace testing_support
