#include "qml/subspace.hpp"

namespace qml {

FpMatrix canonical_subspace(const FpMatrix& spanning_rows) { return row_space(spanning_rows); }

FpMatrix zero_subspace(const PrimeField& field, std::size_t d) { return FpMatrix(field, 0, d); }

FpMatrix whole_space(const PrimeField& field, std::size_t d) { return FpMatrix::identity(field, d); }

FpMatrix subspace_sum(const FpMatrix& a, const FpMatrix& b) {
  return row_space(vstack<PrimeField>({a, b}, a.field(), a.cols()));
}

std::size_t intersection_dim(const FpMatrix& a, const FpMatrix& b) {
  return rank(a) + rank(b) - rank(vstack<PrimeField>({a, b}, a.field(), a.cols()));
}

bool subspace_contains(const FpMatrix& big, const FpMatrix& small) { return row_space_contains(big, small); }

FpMatrix image_of(const FpMatrix& m, const FpMatrix& u) { return row_space(u * m.transpose()); }

FpMatrix common_preimage(const std::vector<FpMatrix>& maps, const std::vector<FpMatrix>& targets,
                         const PrimeField& field, std::size_t source_dim) {
  if (maps.size() != targets.size()) throw DimensionMismatch("common_preimage: one target per map");
  std::vector<FpMatrix> conditions;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].cols() != source_dim || targets[k].cols() != maps[k].rows())
      throw DimensionMismatch("common_preimage: shape mismatch");
    // Rows of the annihilator are functionals vanishing on the target.
    FpMatrix annihilator = kernel_basis(targets[k]).transpose();
    conditions.push_back(annihilator * maps[k]);
  }
  if (conditions.empty()) return whole_space(field, source_dim);
  return kernel_space(vstack(conditions, field, source_dim));
}

FpMatrix column_space(const FpMatrix& m) { return row_space(m.transpose()); }

FpMatrix kernel_space(const FpMatrix& m) { return row_space(kernel_basis(m).transpose()); }

std::uint64_t gaussian_binomial(unsigned p, std::size_t d, std::size_t k) {
  if (k > d) return 0;
  // prod_{i<k} (p^{d-i} - 1) / (p^{i+1} - 1), accumulated exactly.
  unsigned __int128 num = 1;
  unsigned __int128 den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = saturating_pow(p, d - i);
    const auto b = saturating_pow(p, i + 1);
    if (a == UINT64_MAX) return UINT64_MAX;
    num *= (a - 1);
    den *= (b - 1);
    // Keep the fraction small: the partial products are themselves integers.
    auto q = num / den;
    if (q * den == num) {
      num = q;
      den = 1;
    }
    if (num > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(num / den);
}

bool for_each_subspace(const PrimeField& field, std::size_t d, std::size_t k, Budget& budget,
                       const std::function<bool(const FpMatrix&)>& fn) {
  if (k > d) return true;
  const unsigned p = field.characteristic();
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(d, false);
    for (auto c : piv) is_piv[c] = true;
    // Free entries: row r, column c > piv[r], c not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < d; ++c)
        if (!is_piv[c]) free.emplace_back(r, c);
    FpMatrix m(field, k, d);
    for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
    while (true) {
      budget.charge(1, "subspace enumeration");
      if (!fn(m)) return false;
      std::size_t i = 0;
      for (; i < free.size(); ++i) {
        auto& e = m(free[i].first, free[i].second);
        if (e + 1u < p) {
          ++e;
          break;
        }
        e = 0;
      }
      if (i == free.size()) break;
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == d - k + (i - 1)) --i;
    if (i == 0) return true;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<FpMatrix> enumerate_subspaces(const PrimeField& field, std::size_t d, std::size_t k, Budget& budget) {
  std::vector<FpMatrix> out;
  for_each_subspace(field, d, k, budget, [&](const FpMatrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool for_each_subspace_between(const FpMatrix& lower, const FpMatrix& upper, std::size_t k, Budget& budget,
                               const std::function<bool(const FpMatrix&)>& fn) {
  const auto& field = upper.field();
  const std::size_t d = upper.cols();
  const auto lo = row_space(lower);
  const auto up = row_space(upper);
  if (!row_space_contains(up, lo)) throw InvalidArgument("subspace range: lower bound not inside upper bound");
  if (k < lo.rows() || k > up.rows()) return true;
  // Extend the basis of `lo` to one of `up`; the extra rows span a complement.
  FpMatrix basis = lo;
  std::vector<FpMatrix> extra;
  for (std::size_t r = 0; r < up.rows(); ++r) {
    FpMatrix row = up.block(r, 0, 1, d);
    if (row_space_contains(basis, row)) continue;
    basis = vstack<PrimeField>({basis, row}, field, d);
    extra.push_back(row);
  }
  FpMatrix complement = vstack(extra, field, d);
  return for_each_subspace(field, complement.rows(), k - lo.rows(), budget, [&](const FpMatrix& w) {
    return fn(row_space(vstack<PrimeField>({lo, w * complement}, field, d)));
  });
}

}  // namespace qml
