#include "cgw/error.hpp"
#include "cgw/growth.hpp"

namespace cgw {

TranslationEstimate translation_number_estimate(const GroupEngine& e,
                                                PayloadView g, std::size_t N,
                                                std::size_t budget) {
  if (e.is_identity(g)) {
    throw InputError("translation number of the identity is not estimated");
  }
  if (N == 0) {
    throw InputError("translation estimate needs at least one sample");
  }
  LetterSet letters = LetterSet::standard(e);
  TranslationEstimate out;
  out.element = to_payload(g);

  std::size_t base = 0;
  std::size_t half_num = 0;
  std::size_t half_den = 1;
  const std::size_t half = (N + 1) / 2;
  Payload gn = e.identity();
  for (std::size_t n = 1; n <= N; ++n) {
    gn = e.multiply(view(gn), g);
    std::size_t cap = n == 1 ? static_cast<std::size_t>(-1) / 2 : n * base;
    auto len = word_length(e, letters, view(gn), cap, budget);
    if (!len) {
      throw Error("word length of g^" + std::to_string(n) + " not found");
    }
    if (n == 1) {
      base = *len;
    }
    out.lengths.push_back(*len);
    if (n == 1 || *len * out.inf_denominator < out.inf_numerator * n) {
      out.inf_numerator = *len;
      out.inf_denominator = n;
    }
    if (n == half) {
      half_num = out.inf_numerator;
      half_den = out.inf_denominator;
    }
  }
  out.distorted =
      N >= 2 && out.inf_numerator * half_den < half_num * out.inf_denominator;
  return out;
}

}  // namespace cgw
