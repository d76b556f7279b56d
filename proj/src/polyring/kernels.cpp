#include "polymap/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_map>

namespace polymap {

namespace {

using Accum = std::unordered_map<Monomial, CycloNumber, MonomialHash>;

void accumulate(Accum& acc, std::span<const MultiPoly::Term> a, std::span<const MultiPoly::Term> b,
                std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    for (const auto& tb : b) {
      Monomial m = a[i].mono * tb.mono;
      CycloNumber c = a[i].coeff * tb.coeff;
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
  }
}

std::vector<MultiPoly::Term> drain_sorted(Accum& acc, const MonomialOrder& ord) {
  std::vector<MultiPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back(MultiPoly::Term{m, std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [&](const MultiPoly::Term& x, const MultiPoly::Term& y) { return ord.greater(x.mono, y.mono); });
  return out;
}

}  // namespace

int kernel_threads() { return omp_get_max_threads(); }

MultiPoly multiply_terms_serial(const MultiPoly& a, const MultiPoly& b) {
  Accum acc;
  acc.reserve(a.size() * b.size());
  accumulate(acc, a.terms_, b.terms_, 0, a.size());
  return MultiPoly(a.ring_, drain_sorted(acc, a.ring().canonical_order()));
}

MultiPoly multiply_terms_parallel(const MultiPoly& a, const MultiPoly& b) {
  const int nt = std::max(1, omp_get_max_threads());
  std::vector<Accum> partial(static_cast<std::size_t>(nt));
  const std::size_t n = a.size();
#pragma omp parallel num_threads(nt)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    const auto T = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t lo = n * t / T, hi = n * (t + 1) / T;
    accumulate(partial[t], a.terms_, b.terms_, lo, hi);
  }
  // exact arithmetic: the merged sums do not depend on the split
  Accum& acc = partial[0];
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (auto& [m, c] : partial[t]) {
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
  }
  return MultiPoly(a.ring_, drain_sorted(acc, a.ring().canonical_order()));
}

}  // namespace polymap
